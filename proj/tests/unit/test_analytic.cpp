#include <doctest.h>

#include <cmath>
#include <gmpxx.h>

#include "wqed/analytic/asymptotic.hpp"
#include "wqed/analytic/chiral.hpp"
#include "wqed/analytic/coefficients.hpp"
#include "wqed/analytic/symmetric.hpp"
#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/special_functions.hpp"

using namespace wqed;
using namespace wqed::analytic;
using doctest::Approx;

namespace {
mpq_class q(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}
mpq_class factorial(std::size_t n) {
    mpz_class f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
    return mpq_class(f);
}
}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("c_n prefix in exact arithmetic") {
    const auto& t = CoefficientTable::get();
    const mpq_class want[] = {q(1, 1),    q(1, 1),      q(1, 2),       q(5, 36),
                              q(7, 288),  q(7, 2400),   q(11, 43200),  q(143, 8467200)};
    for (std::size_t n = 0; n < 8; ++n) CHECK(t.c_n_exact(n) == want[n]);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(t.c_n_exact(n) == CoefficientTable::hypergeometric_coefficient(n));
}

TEST_CASE("c_ij edge and symmetry") {
    const auto& t = CoefficientTable::get();
    for (std::size_t j = 0; j <= 30; ++j) CHECK(t.c_ij_exact(0, j) == 1 / (factorial(j) * factorial(j + 1)));
    CHECK(t.c_ij_exact(3, 5) == t.c_ij_exact(5, 3));
    CHECK(t.d_ij_exact(0, 0) == -1);
}

TEST_CASE("u table from the c_ij recurrence") {
    const auto& t = CoefficientTable::get();
    CHECK(t.u_exact(1) == 2);
    CHECK(t.u_exact(2) == q(3, 2));
    CHECK(t.u_exact(3) == q(5, 9));
    CHECK(t.u_exact(4) == q(35, 288));
    CHECK(t.u_exact(5) == q(7, 400));
}

TEST_CASE("double extension continues the exact table") {
    const auto& t = CoefficientTable::get();
    CHECK(t.c_n(64) == Approx(t.c_n_exact(64).get_d()).epsilon(1e-14));
    CHECK(t.c_n(65) / t.c_n(64) == Approx(2.0 * 129.0 / (65.0 * 65.0 * 66.0)).epsilon(1e-13));
}

TEST_CASE("chiral power and its series") {
    CHECK(power_chiral(10.0, 0.0) == Approx(10.0));
    CHECK(power_chiral_series(10.0, 0.7, 60) == Approx(power_chiral(10.0, 0.7)).epsilon(1e-12));
    CHECK(power_chiral(10.0, special_time_tsp()) == Approx(10.0 * std::exp(-special_time_tsp())).epsilon(1e-12));
}

TEST_CASE("C1 field") {
    CHECK(c1_field(0.0, 7.0, 0.4) == Approx(c1_edge_bessel(7.0, 0.4)).epsilon(1e-12));
    CHECK(std::abs(c1_field(8.0, 9.0, special_time_tsp())) < 1e-15);
    CHECK_THROWS_AS(c1_field(40.0, 40.0, 0.7, 4), TruncationError);
    CHECK_FALSE(c1_series(40.0, 40.0, 0.7, 4).converged);
}

TEST_CASE("g2(0,t) limits") {
    CHECK(g2_0t_chiral(10.0, 0.0).value == Approx(2.0).epsilon(1e-12));
    CHECK(g2_0t_symmetric(20.0, 1.3) == 2.0);
}

TEST_CASE("S_n closed forms") {
    for (double t : {0.3, 1.0, 2.5}) {
        CHECK(s1_closed(t) == Approx(s_integral_quadrature(1, t)).epsilon(1e-12));
        CHECK(s2_closed(t) == Approx(s_integral_quadrature(2, t)).epsilon(1e-12));
    }
}

TEST_CASE("e1 vanishes at t = 0 and is converged at low order") {
    CHECK(e1_correction(5.0, 0.0).value == 0.0);
    CHECK(e1_correction(4.0, 1.0, 40).converged);
}

TEST_CASE("symmetric closed forms, frozen values") {
    CHECK(gamma_max_symmetric(10.0) == Approx(21.510220502740934).epsilon(1e-14));
    CHECK(peak_time_symmetric(20.0) == Approx(0.64435701639051331).epsilon(1e-14));
    CHECK(p_max_symmetric(20.0) == Approx(4742.0979836678).epsilon(1e-12));
    CHECK(energy_closed_form(1.0) == Approx(1.0972640247326626).epsilon(1e-13));
    CHECK(energy_closed_form(5.0) == Approx(12.329279476884030).epsilon(1e-13));
    CHECK(energy_closed_form(20.0) == Approx(2603.2392905345422).epsilon(1e-13));
    CHECK(energy_closed_form(40.0) == Approx(1700489.2680212674).epsilon(1e-13));
    CHECK(energy_stirling(40.0) / energy_closed_form(40.0) == Approx(1.0).epsilon(0.02));
}

TEST_CASE("symmetric power solves its ODE") {
    std::vector<double> t, p;
    for (int k = 0; k <= 16000; ++k) {
        t.push_back(k * 2.5e-4);
        p.push_back(power_symmetric(5.0, t.back(), 5.0));
    }
    // one-sided differences at the ends dominate the residual
    CHECK(ode_check(5.0, t, p) < 1e-3 * p_max_symmetric(5.0));
}

TEST_CASE("asymptotics, frozen ratios") {
    // exact over asymptotic
    CHECK(hyp1f2_half(400.0) / asymptotic_hyp1f2(100.0) == Approx(1.0132654).epsilon(1e-6));
    CHECK(hyp1f2_half(-400.0) / asymptotic_hyp1f2(-100.0) == Approx(1.0000675).epsilon(1e-6));
    CHECK_THROWS_AS(asymptotic_hyp1f2(10.0), DomainError);
}

}
