// Randomised property checks with a fixed seed.
#include <doctest.h>

#include <cmath>
#include <random>

#include "wqed/analytic/chiral.hpp"
#include "wqed/analytic/coefficients.hpp"
#include "wqed/analytic/symmetric.hpp"
#include "wqed/cli/csv.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/special_functions.hpp"
#include "wqed/exact/solver.hpp"
#include "wqed/sym/observables.hpp"

using namespace wqed;
using doctest::Approx;

namespace {

struct Gen {
    std::mt19937_64 rng{0x5eed};
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    std::size_t integer(std::size_t a, std::size_t b) { return std::uniform_int_distribution<std::size_t>(a, b)(rng); }
    double any_double() {
        const double m = uniform(-1.0, 1.0);
        return std::ldexp(m, static_cast<int>(integer(0, 600)) - 300);
    }
};

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("1F2 series equals Bessel form on moderate arguments") {
    Gen g;
    for (int k = 0; k < 200; ++k) {
        const double z = g.uniform(-30.0, 80.0);
        CAPTURE(z);
        CHECK(hyp1f2_half_series(z) == Approx(hyp1f2_half(z)).epsilon(1e-10));
    }
}

TEST_CASE("1F2 is positive and monotone for z > 0") {
    Gen g;
    for (int k = 0; k < 200; ++k) {
        const double z = g.uniform(0.0, 1000.0);
        CHECK(hyp1f2_half(z + 1.0) > hyp1f2_half(z));
        CHECK(hyp1f2_half(-z) > 0.0);
    }
}

TEST_CASE("c_ij is symmetric and positive") {
    Gen g;
    const auto& t = analytic::CoefficientTable::get();
    for (int k = 0; k < 300; ++k) {
        // the double extension underflows to zero past i + j ~ 118
        const std::size_t i = g.integer(0, 100), j = g.integer(0, 100 - i);
        CHECK(t.c_ij(i, j) == t.c_ij(j, i));
        CHECK(t.c_ij(i, j) > 0.0);
        CHECK(t.d_ij(i, j) < 0.0);
    }
}

TEST_CASE("Gamma symmetric peaks at ln 2") {
    Gen g;
    for (int k = 0; k < 100; ++k) {
        const double b = g.uniform(0.1, 60.0), dt = g.uniform(1e-3, 0.5);
        const double peak = analytic::gamma_symmetric(b, peak_rate_time());
        CHECK(peak >= analytic::gamma_symmetric(b, peak_rate_time() + dt));
        CHECK(peak >= analytic::gamma_symmetric(b, peak_rate_time() - std::min(dt, 0.69)));
    }
}

TEST_CASE("chiral power series converges to the closed form") {
    Gen g;
    for (int k = 0; k < 100; ++k) {
        const double b = g.uniform(0.5, 20.0), t = g.uniform(0.0, 3.0);
        CHECK(analytic::power_chiral_series(b, t, 120) == Approx(analytic::power_chiral(b, t)).epsilon(1e-9));
    }
}

TEST_CASE("hierarchy agrees with the master equation on random systems") {
    Gen g;
    for (int k = 0; k < 6; ++k) {
        const std::size_t n = g.integer(2, 5);
        const double beta = g.uniform(0.02, 0.9);
        const double t = g.uniform(0.2, 4.0);
        CAPTURE(n);
        CAPTURE(beta);
        const auto grid = TimeGrid::uniform(t, 2, 1e-11, 1e-13);
        const auto ref = exact::simulate(SystemConfig(n, beta, Configuration::SymmetricMirror), grid);
        const auto hier = sym::simulate_hierarchy(n, beta, InitialState::FullyInverted, grid);
        CHECK(hier.channel(channel::power_total)[1] ==
              Approx(ref.channel(channel::power_total)[1]).epsilon(1e-7));
    }
}

TEST_CASE("density matrices stay physical under random chiral couplings") {
    Gen g;
    for (int k = 0; k < 4; ++k) {
        const std::size_t n = g.integer(2, 4);
        const SystemConfig c(n, g.uniform(0.05, 1.0), Configuration::Chiral);
        const auto states = exact::evolve(exact::initial_state(c), exact::build_liouvillian(c),
                                          TimeGrid::uniform(g.uniform(0.5, 5.0), 3, 1e-10, 1e-12));
        for (const auto& rho : states) CHECK_NOTHROW(rho.validate(1e-9, 1e-8, 1e-8));
    }
}

TEST_CASE("csv numbers round-trip exactly") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        const double v = g.any_double();
        CHECK(std::stod(cli::format_number(v)) == v);
    }
}

}
