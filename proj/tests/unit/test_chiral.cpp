#include <doctest.h>

#include <cmath>

#include "wqed/analytic/chiral.hpp"
#include "wqed/chiral/continuum.hpp"
#include "wqed/chiral/profiles.hpp"
#include "wqed/core/errors.hpp"

using namespace wqed;
using namespace wqed::chiral;
using doctest::Approx;

TEST_SUITE("chiral_continuum") {

TEST_CASE("packed storage is symmetric") {
    const OpticalGrid g(2.0, 33);
    ContinuumState s(g);
    CHECK(s.packed_index(3, 7) == s.packed_index(7, 3));
    CHECK(s.ct_packed().size() == ContinuumState::packed_size(33));
    CHECK(g.x(32) == Approx(2.0));
}

TEST_CASE("strict limit reproduces the closed form at B = 4") {
    const auto grid = TimeGrid::uniform(3.0, 7, 1e-10, 1e-12);
    const OpticalGrid g(4.0, 129);
    evolve_limit(g, InitialState::FullyInverted, grid, [](std::size_t, double t, const ContinuumState& s) {
        CAPTURE(t);
        CHECK(output_power(s) == Approx(analytic::power_chiral(4.0, t)).epsilon(2e-4));
    });
}

TEST_CASE("Dicke-minus-one start doubles the initial power") {
    const auto grid = TimeGrid::uniform(0.5, 2);
    const auto states = evolve_limit(OpticalGrid(10.0, 65), InitialState::DickeMinusOne, grid);
    CHECK(output_power(states.front()) == Approx(20.0).epsilon(1e-12));
}

TEST_CASE("finite beta converges to the limit") {
    const auto grid = TimeGrid::uniform(1.0, 5, 1e-10, 1e-12);
    const OpticalGrid g(5.0, 65);
    const auto lim = evolve_limit(g, InitialState::FullyInverted, grid);
    double prev = 1.0;
    for (double beta : {4e-2, 2e-2, 1e-2}) {
        ContinuumSummary summary;
        const auto fin = evolve_finite_beta(g, beta, InitialState::FullyInverted, grid, &summary);
        double worst = 0.0;
        for (std::size_t k = 0; k < fin.size(); ++k)
            worst = std::max(worst, std::abs(output_power(fin[k]) / output_power(lim[k]) - 1.0));
        CHECK(worst < prev);
        CHECK(summary.physical);
        prev = worst;
    }
}

TEST_CASE("grid finer than the atoms is rejected") {
    CHECK_THROWS_AS(evolve_finite_beta(OpticalGrid(1.0, 65), 0.5, InitialState::FullyInverted, TimeGrid::uniform(1.0, 3)),
                    DomainError);
}

TEST_CASE("power profile starts at zero and grows along the guide at t = 0") {
    const auto s = evolve_limit(OpticalGrid(3.0, 33), InitialState::FullyInverted, TimeGrid::uniform(0.2, 2)).front();
    const auto p = power_profile(s);
    CHECK(p.front() == 0.0);
    for (std::size_t m = 1; m < p.size(); ++m) CHECK(p[m] > p[m - 1]);
    CHECK(p.back() == Approx(3.0));
}

TEST_CASE("gamma normalisation") {
    const std::vector<double> t{0.0, 1.0}, p{10.0, 10.0 * std::exp(-1.0)};
    const auto g = gamma_norm(p, t, 10.0);
    CHECK(g[0] == Approx(1.0));
    CHECK(g[1] == Approx(1.0));
}

}
