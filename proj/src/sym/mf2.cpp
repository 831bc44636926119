#include "wqed/sym/mf2.hpp"

#include "wqed/core/errors.hpp"
#include "wqed/core/ode.hpp"

namespace wqed::sym {

Mf2State mf2_initial(std::size_t n_atoms, double beta, InitialState state) {
    if (n_atoms < 1) throw DomainError("MF2 needs at least one atom");
    if (state == InitialState::FullyInverted) return {};
    if (n_atoms < 2 || beta <= 0.0) throw DomainError("Dicke start needs N >= 2 and beta > 0");
    const double n = static_cast<double>(n_atoms);
    return {1.0 - 1.0 / n, 1.0 / (n * beta), 1.0 - 2.0 / n};
}

std::vector<Mf2State> evolve_mf2(std::size_t n_atoms, double beta, const Mf2State& init, const TimeGrid& grid) {
    grid.validate();
    if (!(beta >= 0.0) || beta > 1.0) throw DomainError("beta must lie in [0, 1]");
    const double n = static_cast<double>(n_atoms);
    const double b1 = (n - 1.0) * beta;  // N1 beta
    const double b2 = (n - 2.0) * beta;  // N2 beta
    const bool has_pairs = n_atoms >= 2;

    auto rhs = [=](double, std::span<const double> y, std::span<double> dy) {
        const double e = y[0], c = y[1], E = y[2];
        dy[0] = -e - b1 * beta * c;
        dy[1] = has_pairs ? -c - b2 * c + 2.0 * b2 * e * c + (2.0 * E - e) : 0.0;
        dy[2] = -2.0 * E - 2.0 * b2 * beta * e * c;
    };
    std::vector<double> y{init.e, init.ctilde, init.E};
    std::vector<Mf2State> out;
    out.reserve(grid.output_times.size());
    OdeOptions opts;
    opts.rtol = grid.rtol;
    opts.atol = grid.atol;
    integrate(rhs, y, grid.output_times, opts,
              [&](std::size_t, double, std::span<const double> v) { out.push_back({v[0], v[1], v[2]}); });
    return out;
}

}  // namespace wqed::sym
