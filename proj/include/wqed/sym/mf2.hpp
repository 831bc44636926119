#pragma once

#include <cstddef>
#include <vector>

#include "wqed/core/system_config.hpp"

namespace wqed::sym {

/// Second-order closure state per atom, with the pair coherence stored as
/// ctilde = A_{0,1} / beta so it stays O(1) in the thermodynamic limit.
struct Mf2State {
    double e = 1.0;       // A_{1,0}
    double ctilde = 0.0;  // A_{0,1} / beta
    double E = 1.0;       // A_{2,0}
};

Mf2State mf2_initial(std::size_t n_atoms, double beta, InitialState state);

/// Integrates the closed three-variable system
///   (d/dt + 1) A10 = -N1 beta A01
///   (d/dt + 1) A01 = -N2 beta A01 + 2 N2 beta A10 A01 + beta (2 A20 - A10)
///   (d/dt + 2) A20 = -2 N2 beta A10 A01
/// which follows from the hierarchy with A11 ~ A10 A01.
std::vector<Mf2State> evolve_mf2(std::size_t n_atoms, double beta, const Mf2State& init, const TimeGrid& grid);

}  // namespace wqed::sym
