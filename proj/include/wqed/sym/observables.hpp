#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wqed/core/system_config.hpp"
#include "wqed/core/trace.hpp"
#include "wqed/sym/hierarchy.hpp"
#include "wqed/sym/mf2.hpp"

namespace wqed::sym {

/// The moments entering P and G2.
struct LowMoments {
    double a10 = 0.0, a01 = 0.0, a20 = 0.0, a11 = 0.0, a02 = 0.0;
};

LowMoments low_moments(const MomentVector& m);

/// MF2 closure: A11 = A10 A01 and the pairwise factorisation A02 = 2 A01^2.
LowMoments low_moments(const Mf2State& s, double beta);

/// Total waveguide power beta (N A10 + N N1 A01), both directions.
double total_power(const LowMoments& m, std::size_t n_atoms, double beta);

/// <a^dag a^dag a a> of one output direction:
/// (beta^2 / 4)(2 N N1 A20 + 4 N N1 N2 A11 + N N1 N2 N3 A02).
double g2_numerator_one_side(const LowMoments& m, std::size_t n_atoms, double beta);

/// Power split equally into both directions, gamma_norm, g2(t,t) and
/// Q = (g2(t,t) - 2) / beta. Both are NaN where P < 1e-14.
ObservableTrace symmetric_observables(std::span<const double> times, std::span<const LowMoments> moments,
                                      std::size_t n_atoms, double beta);

/// Exact hierarchy from the requested initial state, optionally cut at max_order.
ObservableTrace simulate_hierarchy(std::size_t n_atoms, double beta, InitialState state, const TimeGrid& grid,
                                   std::size_t max_order = 0);

/// MF2 closure, same channels.
ObservableTrace simulate_mf2(std::size_t n_atoms, double beta, InitialState state, const TimeGrid& grid);

/// g2(0, t) = P_psi(t) / P(t): after the first detection the symmetric system
/// sits in |psi_{N-1}>. Channel g2_0t plus power_total of the inverted run.
ObservableTrace g2_zero_t_hierarchy(std::size_t n_atoms, double beta, const TimeGrid& grid);
ObservableTrace g2_zero_t_mf2(std::size_t n_atoms, double beta, const TimeGrid& grid);

struct EnergyEstimate {
    double energy = 0.0;
    double tail_bound = 0.0;  // exponential extrapolation of the cut-off tail
    bool truncated = false;   // tail_bound > 1e-6 energy
};

/// Trapezoidal integral of power_total.
EnergyEstimate waveguide_energy(const ObservableTrace& trace);

/// Largest real part of the generator spectrum (dense eigensolve, N <= 12).
double spectral_abscissa(const Hierarchy& generator);

}  // namespace wqed::sym
