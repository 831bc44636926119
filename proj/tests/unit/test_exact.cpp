#include <doctest.h>

#include <cmath>

#include "wqed/core/errors.hpp"
#include "wqed/exact/solver.hpp"

using namespace wqed;
using namespace wqed::exact;
using doctest::Approx;

TEST_SUITE("exact") {

TEST_CASE("single atom decays with P = beta e^{-t}") {
    const SystemConfig c(1, 0.2, Configuration::Chiral);
    const auto tr = simulate(c, TimeGrid::uniform(4.0, 9, 1e-10, 1e-13));
    for (std::size_t k = 0; k < tr.size(); ++k)
        CHECK(tr.channel(channel::power_total)[k] == Approx(0.2 * std::exp(-tr.times()[k])).epsilon(1e-8));
}

TEST_CASE("Liouvillian is trace preserving") {
    for (auto conf : {Configuration::Chiral, Configuration::SymmetricMirror}) {
        const auto L = build_liouvillian(SystemConfig(3, 0.4, conf));
        CHECK(L.trace_preservation_defect() < 1e-13);
    }
}

TEST_CASE("evolved states stay physical") {
    const SystemConfig c(4, 0.5, Configuration::Chiral);
    const auto L = build_liouvillian(c);
    const auto states = evolve(DensityMatrix::fully_inverted(4), L, TimeGrid::uniform(3.0, 4, 1e-10, 1e-12));
    for (const auto& rho : states) CHECK_NOTHROW(rho.validate(1e-9, 1e-8, 1e-8));
}

TEST_CASE("mirror configuration is exchange symmetric") {
    const SystemConfig c(3, 0.3, Configuration::SymmetricMirror);
    const auto states = evolve(DensityMatrix::fully_inverted(3), build_liouvillian(c), TimeGrid::uniform(1.0, 3));
    const auto& rho = states.back();
    const auto swapped = rho.swap_atoms(0, 2);
    double defect = 0.0;
    for (std::size_t k = 0; k < rho.data().size(); ++k) defect = std::max(defect, std::abs(rho.data()[k] - swapped.data()[k]));
    CHECK(defect < 1e-9);
}

TEST_CASE("chiral atoms: upstream atom is unaffected by the rest") {
    const SystemConfig c(3, 0.6, Configuration::Chiral);
    const auto grid = TimeGrid::uniform(2.0, 5, 1e-10, 1e-13);
    const auto states = evolve(DensityMatrix::fully_inverted(3), build_liouvillian(c), grid);
    for (std::size_t k = 0; k < states.size(); ++k)
        CHECK(states[k].excitation(0) == Approx(std::exp(-grid.output_times[k])).epsilon(1e-8));
}

TEST_CASE("g2(0,0) = 2(1 - 1/N) right after full inversion") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto tr = two_time_g2(SystemConfig(n, 0.25, Configuration::Chiral), TimeGrid::uniform(1.0, 3), 0.0);
        CHECK(tr.channel(channel::g2_0t)[0] == Approx(2.0 * (1.0 - 1.0 / double(n))).epsilon(1e-10));
    }
}

TEST_CASE("Dicke-minus-one state holds N - 1 excitations") {
    const auto rho = DensityMatrix::dicke_minus_one(4);
    double n = 0.0;
    for (std::size_t a = 0; a < 4; ++a) n += rho.excitation(a);
    CHECK(n == Approx(3.0));
    CHECK(rho.trace().real() == Approx(1.0));
}

TEST_CASE("capacity and domain guards") {
    CHECK_THROWS_AS(build_liouvillian(SystemConfig(9, 0.1, Configuration::Chiral)), CapacityError);
    CHECK_THROWS_AS(two_time_g2(SystemConfig(2, 0.0, Configuration::Chiral), TimeGrid::uniform(1.0, 3), 0.0),
                    NormalizationError);
}

}
