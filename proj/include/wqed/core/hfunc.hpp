#pragma once

namespace wqed {

/// h(t) = -(2 e^{-t} + t - 2). All thermodynamic-limit time dependence
/// enters through this function; it is positive on (0, t_sp) and negative
/// afterwards.
double h(double t);

/// dh/dt = 2 e^{-t} - 1.
double h_prime(double t);

/// Unique positive root of h (~1.5936), separating super- and subradiance.
double special_time_tsp();

/// ln 2, where h' vanishes and the normalised decay rate peaks.
double peak_rate_time();

}  // namespace wqed
