#include <doctest.h>

#include <cmath>
#include <vector>

#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/ode.hpp"
#include "wqed/core/special_functions.hpp"
#include "wqed/core/system_config.hpp"
#include "wqed/core/trace.hpp"

using namespace wqed;
using doctest::Approx;

TEST_SUITE("core") {

TEST_CASE("h vanishes at zero and at the special time") {
    CHECK(h(0.0) == 0.0);
    CHECK(special_time_tsp() == Approx(1.593624260040040092).epsilon(1e-15));
    CHECK(std::abs(h(special_time_tsp())) < 1e-15);
    CHECK(h(1.0) > 0.0);
    CHECK(h(2.0) < 0.0);
    CHECK(std::abs(h_prime(peak_rate_time())) < 1e-15);
    CHECK(peak_rate_time() == Approx(std::log(2.0)));
}

TEST_CASE("1F2 frozen values") {
    // independent 50-digit evaluation
    struct Case { double z, value; };
    const Case cases[] = {{4.0, 2.6663835472960837},       {-16.0, 0.16208969265131623},
                          {-100.0, 0.062374279895731348},  {100.0, 794081.61331246555},
                          {400.0, 94899214405998.188},     {-400.0, 0.032363904985189062},
                          {25.0, 149.78713848098537},      {-25.0, 0.13884870456644548}};
    for (const auto& c : cases) {
        CAPTURE(c.z);
        CHECK(hyp1f2_half(c.z) == Approx(c.value).epsilon(1e-12));
    }
    CHECK(hyp1f2_half(0.0) == 1.0);
}

TEST_CASE("1F2 series agrees with the Bessel form where it is stable") {
    for (double z : {-20.0, -3.0, 0.5, 7.0, 60.0}) {
        CAPTURE(z);
        CHECK(hyp1f2_half_series(z) == Approx(hyp1f2_half(z)).epsilon(1e-11));
    }
}

TEST_CASE("scaled 1F2 removes the exponential growth") {
    const double z = 900.0;
    CHECK(hyp1f2_half_scaled(z) == Approx(hyp1f2_half(z) * std::exp(-2.0 * std::sqrt(z))).epsilon(1e-12));
    CHECK(std::isfinite(hyp1f2_half_scaled(1e7)));
}

TEST_CASE("Bessel functions") {
    CHECK(bessel_i(0, 1.0) == Approx(1.2660658777520082).epsilon(1e-14));
    CHECK(bessel_i(1, 20.0) == Approx(42454973.385127775).epsilon(1e-13));
    CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-14);
    CHECK(bessel_j(1, 30.0) == Approx(-0.11875106261662294).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_i(0, 800.0), RangeError);
}

TEST_CASE("incomplete gamma") {
    CHECK(lower_incomplete_gamma(2.0, 2.0) == Approx(0.59399415029016192).epsilon(1e-14));
    CHECK(regularized_lower_gamma(1.0, 3.0) == Approx(1.0 - std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("Dormand-Prince integrates exponential decay") {
    std::vector<double> y{1.0, 0.0};
    const std::vector<double> times{0.0, 0.5, 1.0, 3.0};
    std::vector<double> seen;
    // y0' = -y0, y1' = y0
    integrate([](double, std::span<const double> v, std::span<double> d) { d[0] = -v[0]; d[1] = v[0]; }, y, times,
              {1e-12, 1e-14}, [&](std::size_t, double t, std::span<const double> v) {
                  CHECK(v[0] == Approx(std::exp(-t)).epsilon(1e-10));
                  seen.push_back(t);
              });
    CHECK(seen == times);
    CHECK(y[1] == Approx(1.0 - std::exp(-3.0)).epsilon(1e-10));
}

TEST_CASE("system config") {
    const auto c = SystemConfig::from_optical_depth(100, 10.0, Configuration::SymmetricMirror);
    CHECK(c.beta() == Approx(0.1));
    CHECK(c.beta_forward() + c.beta_backward() == Approx(0.1));
    CHECK(SystemConfig(5, 0.2, Configuration::Chiral).beta_backward() == 0.0);
    CHECK(parse_configuration("symmetric") == Configuration::SymmetricMirror);
    CHECK(parse_initial_state("dicke") == InitialState::DickeMinusOne);
    CHECK_THROWS_AS(parse_configuration("ring"), DomainError);
    CHECK_THROWS_AS(SystemConfig(3, 1.5, Configuration::Chiral), DomainError);
}

TEST_CASE("time grid") {
    const auto g = TimeGrid::uniform(2.0, 5);
    CHECK(g.output_times == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    TimeGrid bad = g;
    bad.output_times[2] = 0.4;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("trace channels keep insertion order") {
    ObservableTrace tr({0.0, 1.0});
    tr.set_channel("b", {1.0, 2.0});
    tr.set_channel("a", {3.0, 4.0});
    REQUIRE(tr.channels().size() == 2);
    CHECK(tr.channels()[0].first == "b");
    CHECK_THROWS(tr.set_channel("c", {1.0}));
    CHECK_FALSE(tr.has_channel("zzz"));
}

}
