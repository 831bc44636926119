#pragma once

#include <utility>
#include <vector>

#include "wqed/core/system_config.hpp"
#include "wqed/core/trace.hpp"
#include "wqed/exact/density_matrix.hpp"
#include "wqed/exact/liouvillian.hpp"

namespace wqed::exact {

/// Integrates rho along grid.output_times with the adaptive RK kernel.
/// `rho0` must be a normalised state.
std::vector<DensityMatrix> evolve(const DensityMatrix& rho0, const Liouvillian& L, const TimeGrid& grid);

/// Same, without the normalisation check (conditional states a rho a^dagger).
std::vector<DensityMatrix> evolve_unnormalized(const DensityMatrix& rho0, const Liouvillian& L,
                                               const TimeGrid& grid);

/// Output-mode amplitudes: a_out = -i sum_i r_i s-_i (right), -i sum_i l_i s-_i (left).
std::vector<complex> right_output_coefficients(const Couplings& c);
std::vector<complex> left_output_coefficients(const Couplings& c);

/// <a^dagger a> for a = sum_i coeffs_i s-_i.
double mode_occupation(const DensityMatrix& rho, std::span<const complex> coeffs);

/// (P_r, P_l) = (<a_out^dagger a_out>, <b_out^dagger b_out>).
std::pair<double, double> waveguide_power(const DensityMatrix& rho, const Couplings& couplings);
std::pair<double, double> waveguide_power(const DensityMatrix& rho, const SystemConfig& config);

/// <a^dagger a^dagger a a> on the right output mode.
double right_mode_g2_numerator(const DensityMatrix& rho, const Couplings& couplings);

/// Initial state named by the config.
DensityMatrix initial_state(const SystemConfig& config);

/// Full single-time observables: power channels, gamma_norm (P / (B e^{-t})),
/// excitation_mean (sum_i <n_i>) and the right-mode g2(t, t).
ObservableTrace simulate(const SystemConfig& config, const TimeGrid& grid);

/// g2(t1, t) on the right output mode for every grid time t >= t1, by
/// conditional evolution of a rho(t1) a^dagger (quantum regression).
/// Channels: g2_0t holds g2(t1, t); power_right holds P_r(t).
/// Throws NormalizationError when P_r(t1) < 1e-14.
ObservableTrace two_time_g2(const SystemConfig& config, const TimeGrid& grid, double t1);

}  // namespace wqed::exact
