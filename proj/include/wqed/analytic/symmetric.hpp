#pragma once

#include <span>

namespace wqed::analytic {

/// Thermodynamic-limit power of the mirror configuration,
/// P = P0 e^{-t} exp(B h(t)); P0 = B for both directions from full inversion.
double power_symmetric(double b, double t, double p0);

/// Max residual of (d/dt + B + 1 - 2B e^{-t}) P over a sampled trace
/// (central differences inside, one-sided at the ends).
double ode_check(double b, std::span<const double> times, std::span<const double> power);

/// Gamma(B, t) = exp(B h(t)).
double gamma_symmetric(double b, double t);

/// (e/2)^B, reached at t = ln 2.
double gamma_max_symmetric(double b);

/// argmax_t P: ln(2B/(B+1)) for B > 1, else 0.
double peak_time_symmetric(double b);

/// B ((B+1)/(2B))^{B+1} e^{B-1}, peak total power for P0 = B (B >= 1).
double p_max_symmetric(double b);

/// P_psi / P from the closed forms; both solve the same first-order ODE,
/// so the ratio is pinned to its t = 0 value 2.
double g2_0t_symmetric(double b, double t);

/// Total photons into the waveguide, e^{2B} gamma(B+1, 2B) / (2 (2B)^B).
double energy_closed_form(double b);

/// Adaptive quadrature of power_symmetric(B, t, B) over [0, inf).
double energy_quadrature(double b);

/// sqrt(pi B / 2) (e/2)^B, the large-B asymptote.
double energy_stirling(double b);

}  // namespace wqed::analytic
