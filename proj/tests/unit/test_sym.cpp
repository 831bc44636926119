#include <doctest.h>

#include <cmath>

#include "wqed/core/errors.hpp"
#include "wqed/exact/solver.hpp"
#include "wqed/sym/observables.hpp"

using namespace wqed;
using namespace wqed::sym;
using doctest::Approx;

TEST_SUITE("sym_moments") {

TEST_CASE("layout enumerates p + 2c <= N") {
    const MomentLayout l(5);
    CHECK(l.size() == MomentLayout::count_for(5));
    CHECK(l.size() == 12);  // (N/2 + 1)(N - N/2 + 1) for N = 5
    for (std::size_t k = 0; k < l.size(); ++k) {
        const auto idx = l.at(k);
        CHECK(l.index(idx.p, idx.c) == k);
        CHECK(idx.order() <= 5);
    }
    CHECK_FALSE(l.contains(2, 2));
}

TEST_CASE("hierarchy matches the master equation at N = 4") {
    const double beta = 0.3;
    const auto grid = TimeGrid::uniform(3.0, 13, 1e-11, 1e-13);
    const auto ref = exact::simulate(SystemConfig(4, beta, Configuration::SymmetricMirror), grid);
    const auto hier = simulate_hierarchy(4, beta, InitialState::FullyInverted, grid);
    for (std::size_t k = 0; k < grid.output_times.size(); ++k) {
        CHECK(hier.channel(channel::power_total)[k] == Approx(ref.channel(channel::power_total)[k]).epsilon(1e-7));
        CHECK(hier.channel(channel::g2_tt)[k] == Approx(ref.channel(channel::g2_tt)[k]).epsilon(1e-6));
    }
}

TEST_CASE("Dicke-minus-one moments") {
    const auto m = dicke_minus_one_initial(5);
    CHECK(m(1, 0) == Approx(0.8));
    CHECK(m(0, 1) == Approx(0.2));
    CHECK(m(0, 2) == 0.0);
}

TEST_CASE("MF2 single atom is a plain exponential") {
    const auto grid = TimeGrid::uniform(2.0, 5, 1e-11, 1e-13);
    const auto s = evolve_mf2(1, 0.5, mf2_initial(1, 0.5, InitialState::FullyInverted), grid);
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s[k].e == Approx(std::exp(-grid.output_times[k])).epsilon(1e-9));
        CHECK(s[k].ctilde == 0.0);
    }
}

TEST_CASE("MF2 is exact at second order for N = 2") {
    // two atoms have no three-body moments, so the closure is never used
    const auto grid = TimeGrid::uniform(3.0, 7, 1e-11, 1e-13);
    const auto h = simulate_hierarchy(2, 0.4, InitialState::FullyInverted, grid);
    const auto m = simulate_mf2(2, 0.4, InitialState::FullyInverted, grid);
    for (std::size_t k = 0; k < grid.output_times.size(); ++k)
        CHECK(m.channel(channel::power_total)[k] == Approx(h.channel(channel::power_total)[k]).epsilon(1e-8));
}

TEST_CASE("g2(0,0) from the hierarchy") {
    const auto tr = g2_zero_t_hierarchy(6, 0.1, TimeGrid::uniform(1.0, 3));
    CHECK(tr.channel(channel::g2_0t)[0] == Approx(2.0 * (1.0 - 1.0 / 6.0)).epsilon(1e-10));
}

TEST_CASE("generator has no growing modes") {
    // A_{0,0} = 1 is conserved, so the abscissa is exactly zero
    CHECK(std::abs(spectral_abscissa(build_hierarchy(6, 0.2))) < 1e-12);
}

TEST_CASE("single-atom energy equals beta") {
    const auto tr = simulate_hierarchy(1, 0.3, InitialState::FullyInverted, TimeGrid::uniform(30.0, 6001, 1e-11, 1e-14));
    const auto e = waveguide_energy(tr);
    CHECK(e.energy == Approx(0.3).epsilon(1e-6));
    CHECK_FALSE(e.truncated);
}

TEST_CASE("late-time g2 is undefined, power is not") {
    const auto tr = simulate_mf2(8, 0.25, InitialState::FullyInverted, TimeGrid::uniform(60.0, 7));
    CHECK(std::isnan(tr.channel(channel::g2_tt).back()));
    CHECK(tr.channel(channel::power_total).back() > -1e-9);  // integrator atol
}

TEST_CASE("truncated energy is flagged") {
    const auto tr = simulate_hierarchy(1, 0.3, InitialState::FullyInverted, TimeGrid::uniform(2.0, 201));
    CHECK(waveguide_energy(tr).truncated);
}

TEST_CASE("cut hierarchy reproduces the full one at early times") {
    const std::size_t n = 60;
    const auto grid = TimeGrid::uniform(0.5, 11, 1e-11, 1e-18);
    const auto full = simulate_hierarchy(n, 10.0 / n, InitialState::FullyInverted, grid);
    const auto cut = simulate_hierarchy(n, 10.0 / n, InitialState::FullyInverted, grid, 45);
    const auto& a = full.channel(channel::power_total);
    const auto& b = cut.channel(channel::power_total);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k] == Approx(a[k]).epsilon(1e-8));
}

TEST_CASE("unstable full hierarchy is reported, not returned") {
    CHECK_THROWS_AS(simulate_hierarchy(300, 10.0 / 300, InitialState::FullyInverted, TimeGrid::uniform(2.0, 21)),
                    StiffnessError);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(build_hierarchy(20000, 1e-4), CapacityError);
    CHECK_THROWS_AS(build_hierarchy(4, 1.5), DomainError);
    CHECK_THROWS_AS(g2_zero_t_mf2(10, 0.0, TimeGrid::uniform(1.0, 3)), DomainError);
}

}
