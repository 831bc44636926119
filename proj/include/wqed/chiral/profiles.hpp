#pragma once

#include <span>
#include <vector>

#include "wqed/chiral/continuum.hpp"

namespace wqed::chiral {

/// P(x_m) = int_0^{x_m} e dx' + D(x_m), D = double integral of Ct over
/// [0, x_m]^2; trapezoid in both directions.
std::vector<double> power_profile(const ContinuumState& state);

/// P at the far end x = B only.
double output_power(const ContinuumState& state);

struct QProfile {
    std::vector<double> q;   // Q(x_m) = 2 P^2 + 2 iint (E - e e)
    std::vector<double> g2;  // Q / P^2 (NaN at x = 0)
};

/// Throws NormalizationError where P < 1e-14 away from x = 0.
QProfile q_profile(const ContinuumState& state);

/// Gamma(B, t) = P(B, t) / (B e^{-t}).
std::vector<double> gamma_norm(std::span<const double> power, std::span<const double> times, double scaled_od);

}  // namespace wqed::chiral
