#include "wqed/verify/acceptance.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "wqed/analytic/asymptotic.hpp"
#include "wqed/analytic/chiral.hpp"
#include "wqed/analytic/coefficients.hpp"
#include "wqed/analytic/symmetric.hpp"
#include "wqed/chiral/continuum.hpp"
#include "wqed/chiral/profiles.hpp"
#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/special_functions.hpp"
#include "wqed/exact/solver.hpp"
#include "wqed/sym/hierarchy.hpp"
#include "wqed/sym/observables.hpp"

namespace wqed::verify {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

struct Recorder {
    CriterionResult& r;
    std::ostringstream text;
    bool ok = true;

    void check(const std::string& name, double measured, double bound, bool pass) {
        r.measurements.emplace_back(name, measured);
        text << name << "=" << measured << (pass ? " <= " : " > ") << bound << "; ";
        ok = ok && pass;
    }
    void check_le(const std::string& name, double measured, double bound) {
        check(name, measured, bound, measured <= bound);
    }
    void check_ge(const std::string& name, double measured, double bound) {
        r.measurements.emplace_back(name, measured);
        const bool pass = measured >= bound;
        text << name << "=" << measured << (pass ? " >= " : " < ") << bound << "; ";
        ok = ok && pass;
    }
    void check_true(const std::string& name, bool pass, const std::string& note = "") {
        r.measurements.emplace_back(name, pass ? 1.0 : 0.0);
        text << name << (pass ? " ok" : " FAILED") << (note.empty() ? "" : " (" + note + ")") << "; ";
        ok = ok && pass;
    }
    void note(const std::string& name, double value) {
        r.measurements.emplace_back(name, value);
        text << name << "=" << value << "; ";
    }
};

// 50-digit Taylor sum of 1F2(1/2; 1, 2; z): independent of the Bessel kernels.
double hyp1f2_reference(double z) {
    Real50 term = 1, sum = 1;
    const Real50 zz = z;
    for (int n = 0; n < 2000; ++n) {
        term *= zz * Real50(2 * n + 1) / Real50(2) / (Real50(n + 1) * Real50(n + 2) * Real50(n + 1));
        sum += term;
        if (n > 10 && abs(term) < Real50("1e-45") * abs(sum)) break;
    }
    return static_cast<double>(sum);
}

void c1_coefficients(Recorder& rec) {
    const auto& tab = analytic::CoefficientTable::get();
    const std::vector<mpq_class> expected{mpq_class(1),        mpq_class(1),           mpq_class(1, 2),
                                          mpq_class(5, 36),    mpq_class(7, 288),      mpq_class(7, 2400),
                                          mpq_class(11, 43200), mpq_class(143, 8467200)};
    bool list_ok = true;
    for (std::size_t n = 0; n < expected.size(); ++n) list_ok = list_ok && tab.c_n_exact(n) == expected[n];
    rec.check_true("c_n(0..7) == listed values", list_ok);
    bool hyp_ok = true;
    for (std::size_t n = 0; n <= 30; ++n)
        hyp_ok = hyp_ok && tab.c_n_exact(n) == analytic::CoefficientTable::hypergeometric_coefficient(n);
    rec.check_true("c_n == 4^n(1/2)_n/((1)_n(2)_n n!) for n<=30", hyp_ok);
    bool diag_ok = true;
    for (std::size_t n = 1; n <= 30; ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += tab.c_ij_exact(i, n - 1 - i) / mpq_class((i + 1) * (n - i));
        diag_ok = diag_ok && acc == tab.c_n_exact(n);
    }
    rec.check_true("c_n == sum c_ij/((i+1)(j+1)) for n<=30", diag_ok);
}

void c2_bessel(Recorder& rec) {
    double worst_pos = 0.0, worst_neg = 0.0, worst_lib = 0.0;
    for (int k = 0; k <= 4000; ++k) {
        const double z = 0.1 * k;
        const double ref = hyp1f2_reference(z);
        const double r = std::sqrt(z);
        const double i0 = bessel_i(0, r), i1 = bessel_i(1, r);
        worst_pos = std::max(worst_pos, std::abs((i0 * i0 - i1 * i1) / ref - 1.0));
        const double refn = hyp1f2_reference(-z);
        const double j0 = bessel_j(0, r), j1 = bessel_j(1, r);
        worst_neg = std::max(worst_neg, std::abs((j0 * j0 + j1 * j1) / refn - 1.0));
        worst_lib = std::max({worst_lib, std::abs(hyp1f2_half(z) / ref - 1.0), std::abs(hyp1f2_half(-z) / refn - 1.0)});
    }
    rec.check_le("max rel |1F2 - (I0^2-I1^2)| on [0,400]", worst_pos, 1e-9);
    rec.check_le("max rel |1F2 - (J0^2+J1^2)| on [-400,0]", worst_neg, 1e-9);
    rec.check_le("max rel |hyp1f2_half - 1F2| on [-400,400]", worst_lib, 1e-9);
}

void c3_oracle_symmetric(Recorder& rec) {
    const auto grid = TimeGrid::uniform(5.0, 101, 1e-11, 1e-13);
    double dp = 0.0, dg = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (double beta : {0.05, 0.3}) {
            const SystemConfig cfg(n, beta, Configuration::SymmetricMirror);
            const auto ex = exact::simulate(cfg, grid);
            const auto hy = sym::simulate_hierarchy(n, beta, InitialState::FullyInverted, grid);
            const auto eg = exact::two_time_g2(cfg, grid, 0.0);
            const auto hg = sym::g2_zero_t_hierarchy(n, beta, grid);
            for (std::size_t k = 0; k < grid.output_times.size(); ++k) {
                dp = std::max(dp, std::abs(ex.channel(channel::power_total)[k] - hy.channel(channel::power_total)[k]));
                dg = std::max(dg, std::abs(eg.channel(channel::g2_0t)[k] - hg.channel(channel::g2_0t)[k]));
            }
        }
    }
    rec.check_le("max |dP| exact vs hierarchy", dp, 1e-7);
    rec.check_le("max |dg2(0,t)| exact vs hierarchy", dg, 1e-6);
}

double continuum_error(std::size_t points, double b) {
    const chiral::OpticalGrid g(b, points);
    const auto times = TimeGrid::uniform(3.0, 61, 1e-10, 1e-12);
    double worst = 0.0;
    chiral::evolve_limit(g, InitialState::FullyInverted, times, [&](std::size_t, double t, const chiral::ContinuumState& s) {
        worst = std::max(worst, std::abs(chiral::output_power(s) / analytic::power_chiral(b, t) - 1.0));
    });
    return worst;
}

void c4_continuum(Recorder& rec) {
    const double e513 = continuum_error(513, 10.0);
    const double e1025 = continuum_error(1025, 10.0);
    rec.check_le("max rel error M=513", e513, 5e-3);
    rec.check_le("max rel error M=1025", e1025, 1.5e-3);
    rec.check_ge("observed order", std::log2(e513 / e1025), 1.8);
}

void c5_special_time(Recorder& rec) {
    const double tsp = special_time_tsp();
    rec.note("t_sp", tsp);
    rec.check_true("t_sp rounds to 1.59", std::round(tsp * 100.0) == 159.0);
    double worst = 0.0;
    for (double b : {10.0, 40.0, 100.0}) {
        worst = std::max(worst, std::abs(analytic::power_chiral(b, tsp) / (b * std::exp(-tsp)) - 1.0));
        worst = std::max(worst, std::abs(analytic::gamma_symmetric(b, tsp) - 1.0));
    }
    rec.check_le("max |Gamma(B, t_sp) - 1|", worst, 1e-10);
    const double dt = 1e-3;
    for (double b : {10.0, 40.0}) {
        double best_c = -1.0, best_s = -1.0, t_c = 0.0, t_s = 0.0;
        for (int k = 0; k <= 3000; ++k) {
            const double t = k * dt;
            const double gc = analytic::power_chiral(b, t) / (b * std::exp(-t));
            const double gs = analytic::gamma_symmetric(b, t);
            if (gc > best_c) best_c = gc, t_c = t;
            if (gs > best_s) best_s = gs, t_s = t;
        }
        const std::string tag = "B=" + std::to_string(static_cast<int>(b));
        rec.check_le("|argmax Gamma_chiral - ln2| " + tag, std::abs(t_c - std::numbers::ln2), dt);
        rec.check_le("|argmax Gamma_symmetric - ln2| " + tag, std::abs(t_s - std::numbers::ln2), dt);
    }
}

void c6_symmetric_closed(Recorder& rec) {
    const std::size_t n = std::size_t{1} << 20;
    const double b = 20.0;
    const auto grid = TimeGrid::uniform(8.0, 16001, 1e-10, 1e-14);
    const auto trace = sym::simulate_mf2(n, b / static_cast<double>(n), InitialState::FullyInverted, grid);
    const auto energy = sym::waveguide_energy(trace);
    rec.check_true("energy tail resolved", !energy.truncated);
    rec.check_le("|photons/2600 - 1|", std::abs(energy.energy / 2600.0 - 1.0), 0.05);
    rec.check_le("|enhancement/130 - 1|", std::abs(energy.energy / b / 130.0 - 1.0), 0.05);
    double worst = 0.0;
    for (double bb : {1.0, 5.0, 20.0, 40.0})
        worst = std::max(worst, std::abs(analytic::energy_quadrature(bb) / analytic::energy_closed_form(bb) - 1.0));
    rec.check_le("max rel |quadrature - gamma form|", worst, 1e-8);
}

void c7_thermodynamic_approach(Recorder& rec) {
    const double b = 10.0;
    const auto times = TimeGrid::uniform(1.2, 25, 1e-9, 1e-12);
    std::vector<double> devs;
    for (double n : {900.0, 3e4, 1e5}) {
        const chiral::OpticalGrid g(b, 257);
        double worst = 0.0;
        chiral::evolve_finite_beta(g, b / n, InitialState::FullyInverted, times,
                                   [&](std::size_t, double t, const chiral::ContinuumState& s) {
                                       worst = std::max(worst, std::abs(chiral::output_power(s) / analytic::power_chiral(b, t) - 1.0));
                                   });
        rec.note("max rel dev N=" + std::to_string(static_cast<long>(n)), worst);
        devs.push_back(worst);
    }
    rec.check_le("deviation at N=3e4", devs[1], 0.01);
    rec.check_true("deviation decreasing in N", devs[0] > devs[1] && devs[1] > devs[2]);
}

void c8_g2(Recorder& rec) {
    double sym_worst = 0.0;
    for (double b : {1.0, 10.0, 40.0})
        for (int k = 0; k <= 100; ++k)
            sym_worst = std::max(sym_worst, std::abs(analytic::g2_0t_symmetric(b, 0.05 * k) - 2.0));
    rec.check_le("symmetric |g2(0,t) - 2|", sym_worst, 4 * std::numeric_limits<double>::epsilon());

    const double b = 10.0;
    rec.check_le("chiral series |g2(0,0) - 2|", std::abs(analytic::g2_0t_chiral(b, 0.0).value - 2.0), 1e-8);
    const auto times = TimeGrid::uniform(2.0, 41, 1e-10, 1e-12);
    const chiral::OpticalGrid g(b, 513);
    std::vector<double> p_inv, p_psi;
    chiral::evolve_limit(g, InitialState::FullyInverted, times,
                         [&](std::size_t, double, const chiral::ContinuumState& s) { p_inv.push_back(chiral::output_power(s)); });
    chiral::evolve_limit(g, InitialState::DickeMinusOne, times,
                         [&](std::size_t, double, const chiral::ContinuumState& s) { p_psi.push_back(chiral::output_power(s)); });
    double worst = 0.0;
    bool converged = true;
    for (std::size_t k = 0; k < times.output_times.size(); ++k) {
        const auto series = analytic::g2_0t_chiral(b, times.output_times[k]);
        converged = converged && series.converged;
        worst = std::max(worst, std::abs(series.value / (p_psi[k] / p_inv[k]) - 1.0));
    }
    rec.check_true("chiral series converged (k_max 36 vs 37)", converged);
    rec.check_le("max rel |series - continuum ratio| t<=2", worst, 5e-3);

    double exact_worst = 0.0;
    const auto t0 = TimeGrid::uniform(0.5, 3, 1e-10, 1e-12);
    for (std::size_t n = 2; n <= 6; ++n) {
        const double expect = 2.0 * (1.0 - 1.0 / static_cast<double>(n));
        for (auto conf : {Configuration::Chiral, Configuration::SymmetricMirror}) {
            const auto tr = exact::two_time_g2(SystemConfig(n, 0.2, conf), t0, 0.0);
            exact_worst = std::max(exact_worst, std::abs(tr.channel(channel::g2_0t)[0] - expect));
        }
        const auto hg = sym::g2_zero_t_hierarchy(n, 0.2, t0);
        exact_worst = std::max(exact_worst, std::abs(hg.channel(channel::g2_0t)[0] - expect));
    }
    rec.check_le("exact |g2(0,0) - 2(1-1/N)|, N<=6", exact_worst, 1e-8);
}

void c9_correlation(Recorder& rec) {
    const double tp = peak_rate_time();
    double worst = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double y = 0.1 * k;
        const double ref = analytic::c1_edge_bessel(y, tp);
        worst = std::max(worst, std::abs(analytic::c1_field(0.0, y, tp) - ref) / std::abs(ref));
    }
    rec.check_le("max rel |C1(0,y,t_p) - Bessel form|, y<=40", worst, 1e-10);
    const double tsp = special_time_tsp();
    double at_tsp = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) at_tsp = std::max(at_tsp, std::abs(analytic::c1_field(i, j, tsp)));
    rec.check_le("max |C1(x,y,t_sp)|, x,y<=20", at_tsp, 1e-12);
    const auto& tab = analytic::CoefficientTable::get();
    bool edge = true;
    mpz_class f = 1;  // j!
    for (unsigned long j = 0; j <= 30; ++j) {
        if (j > 0) f *= j;
        mpq_class expect(mpz_class(1), f * f * (j + 1));
        expect.canonicalize();
        edge = edge && tab.c_ij_exact(0, j) == expect && tab.c_ij_exact(j, 0) == expect;
    }
    rec.check_true("c_0j = 1/(j!(j+1)!), j<=30", edge);
}

void c10_excitation(Recorder& rec) {
    double worst = 0.0;
    for (int k = 0; k <= 500; ++k) {
        const double t = 0.01 * k;
        worst = std::max({worst, std::abs(analytic::s1_closed(t) - analytic::s_integral_quadrature(1, t)),
                          std::abs(analytic::s2_closed(t) - analytic::s_integral_quadrature(2, t))});
    }
    rec.check_le("max |S1,S2 closed - quadrature|", worst, 1e-10);

    const auto& tab = analytic::CoefficientTable::get();
    const std::vector<mpq_class> listed{mpq_class(2), mpq_class(3, 2), mpq_class(5, 9), mpq_class(175, 144)};
    std::ostringstream got;
    bool prefix = true;
    for (std::size_t n = 0; n < listed.size(); ++n) {
        prefix = prefix && tab.u_exact(n + 1) == listed[n];
        got << (n ? "," : "") << tab.u_exact(n + 1).get_str();
    }
    rec.check_true("u prefix == {2,3/2,5/9,175/144}", prefix, "generated " + got.str());

    const double b = 10.0;
    const chiral::OpticalGrid g(b, 257);
    const auto times = TimeGrid::uniform(2.0, 41, 1e-11, 1e-14);
    const std::vector<double> depths{2.0, 4.0, 6.0, 8.0, 10.0};
    std::vector<std::vector<double>> e1(depths.size());
    std::vector<double> scale(depths.size(), 0.0);
    for (std::size_t d = 0; d < depths.size(); ++d) {
        for (double t : times.output_times) {
            e1[d].push_back(analytic::e1_correction(depths[d], t).value);
            scale[d] = std::max(scale[d], std::abs(e1[d].back()));
        }
    }
    std::vector<double> at_end;
    for (double beta : {2e-4, 1e-4}) {
        double worst_rel = 0.0;
        chiral::evolve_finite_beta(g, beta, InitialState::FullyInverted, times,
                                   [&](std::size_t k, double t, const chiral::ContinuumState& s) {
                                       for (std::size_t d = 0; d < depths.size(); ++d) {
                                           const auto m = static_cast<std::size_t>(std::lround(depths[d] / g.dx()));
                                           const double delta = s.e(m) - std::exp(-t);
                                           worst_rel = std::max(worst_rel, std::abs(delta / beta - e1[d][k]) / scale[d]);
                                           if (d + 1 == depths.size() && k == 20) at_end.push_back(delta);
                                       }
                                   });
        rec.check_le("max |delta/beta - e1| / max|e1|, beta=" + std::to_string(beta), worst_rel, 0.02);
    }
    rec.note("delta(2e-4)/delta(1e-4) at x=10,t=1", at_end[0] / at_end[1]);
}

void c11_asymptotics(Recorder& rec) {
    const double up = analytic::asymptotic_hyp1f2(100.0) / hyp1f2_half(400.0);
    const double down = analytic::asymptotic_hyp1f2(-100.0) / hyp1f2_half(-400.0);
    rec.check_le("|ratio - 1| s=+100", std::abs(up - 1.0), 0.05);
    rec.check_le("|ratio - 1| s=-100", std::abs(down - 1.0), 0.05);

    const double x = 100.0;
    auto m = [x](double t) {
        const double r = x * (t - 2.0);
        return std::numbers::pi * std::sqrt(r) * hyp1f2_half(4.0 * x * h(t));
    };
    const double dt = 1e-4;
    std::vector<double> found;
    double prev = m(4.0 - dt), cur = m(4.0);
    for (double t = 4.0; t + dt <= 10.0; t += dt) {
        const double next = m(t + dt);
        if ((cur - prev) * (next - cur) < 0.0) {
            // parabolic refinement
            const double denom = prev - 2.0 * cur + next;
            found.push_back(t + (denom != 0.0 ? 0.5 * dt * (prev - next) / denom : 0.0));
        }
        prev = cur;
        cur = next;
    }
    std::vector<double> predicted;
    for (int k = 1;; ++k) {
        const double tk = 2.0 + std::pow(k * std::numbers::pi / 4.0, 2) / x;
        if (tk > 10.0) break;
        if (tk >= 4.0) predicted.push_back(tk);
    }
    rec.note("extrema found", static_cast<double>(found.size()));
    rec.note("extrema predicted", static_cast<double>(predicted.size()));
    bool count_ok = found.size() >= 3 && (found.size() == predicted.size() || found.size() + 1 == predicted.size() ||
                                          found.size() == predicted.size() + 1);
    rec.check_true("extrema count matches prediction", count_ok);
    double worst = 0.0;
    if (count_ok) {
        // pair each measured extremum with the nearest predicted one
        for (std::size_t i = 1; i < found.size(); ++i) {
            auto nearest = [&](double t) {
                std::size_t best = 0;
                for (std::size_t j = 1; j < predicted.size(); ++j)
                    if (std::abs(predicted[j] - t) < std::abs(predicted[best] - t)) best = j;
                return best;
            };
            const std::size_t a = nearest(found[i - 1]), c = nearest(found[i]);
            if (c != a + 1) {
                worst = std::numeric_limits<double>::infinity();
                break;
            }
            const double spacing = predicted[c] - predicted[a];
            worst = std::max(worst, std::abs((found[i] - found[i - 1]) / spacing - 1.0));
        }
    }
    rec.check_le("max rel spacing error of extrema, t in [4,10]", worst, 0.05);
}

struct AnsatzResiduals {
    double r01 = 0.0, r11 = 0.0, r02 = 0.0;
    double q_gap = 0.0, q_scale = 0.0;
    double cut_gap = 0.0;  // max |A(order) - A(check order)| over the low moments
};

// The full hierarchy at N ~ 10^3 amplifies round-off beyond |A| <= 1 in double
// precision, so this runs a cut hierarchy on the window where two cuts agree.
constexpr double kAnsatzWindow = 0.8;
constexpr std::size_t kAnsatzOrder = 200, kAnsatzCheckOrder = 280;

AnsatzResiduals ansatz_residuals(std::size_t n, double b) {
    const double beta = b / static_cast<double>(n);
    const auto grid = TimeGrid::uniform(kAnsatzWindow, 41, 1e-11, 1e-18);
    AnsatzResiduals out;
    std::vector<sym::LowMoments> lows;
    {
        const auto gen = sym::build_hierarchy(n, beta, kAnsatzOrder);
        sym::evolve_exact(gen, sym::inverted_initial(n, kAnsatzOrder), grid,
                          [&](std::size_t, double t, const sym::MomentVector& m) {
                              const double ref = beta / b * std::exp(-t) * std::expm1(b * h(t));
                              out.r01 = std::max(out.r01, std::abs(m(0, 1) - ref));
                              out.r11 = std::max(out.r11, std::abs(m(1, 1) - std::exp(-t) * ref));
                              out.r02 = std::max(out.r02, std::abs(m(0, 2) - 2.0 * ref * ref));
                              lows.push_back(sym::low_moments(m));
                          });
    }
    {
        const auto gen = sym::build_hierarchy(n, beta, kAnsatzCheckOrder);
        sym::evolve_exact(gen, sym::inverted_initial(n, kAnsatzCheckOrder), grid,
                          [&](std::size_t k, double, const sym::MomentVector& m) {
                              const auto& l = lows[k];
                              for (double d : {m(1, 0) - l.a10, m(0, 1) - l.a01, m(2, 0) - l.a20, m(1, 1) - l.a11,
                                               m(0, 2) - l.a02})
                                  out.cut_gap = std::max(out.cut_gap, std::abs(d));
                          });
    }
    const auto exact_obs = sym::symmetric_observables(grid.output_times, lows, n, beta);
    const auto mf2_obs = sym::simulate_mf2(n, beta, InitialState::FullyInverted, grid);
    const auto& qe = exact_obs.channel(channel::q_value);
    const auto& qm = mf2_obs.channel(channel::q_value);
    for (std::size_t k = 0; k < qe.size(); ++k) {
        out.q_gap = std::max(out.q_gap, std::abs(qe[k] - qm[k]));
        out.q_scale = std::max(out.q_scale, std::abs(qe[k]));
    }
    return out;
}

void c12_ansatz(Recorder& rec) {
    const double b = 10.0;
    const auto lo = ansatz_residuals(1024, b);
    const auto hi = ansatz_residuals(2048, b);
    rec.note("window t_max", kAnsatzWindow);
    rec.check_le("cut order 200 vs 280, N=1024", lo.cut_gap, 1e-3 * std::min({lo.r01, lo.r11, lo.r02}));
    rec.check_le("cut order 200 vs 280, N=2048", hi.cut_gap, 1e-3 * std::min({hi.r01, hi.r11, hi.r02}));
    const double ratio = std::log(2.0);  // beta halves
    const double p01 = std::log(lo.r01 / hi.r01) / ratio;
    const double p11 = std::log(lo.r11 / hi.r11) / ratio;
    const double p02 = std::log(lo.r02 / hi.r02) / ratio;
    rec.check_le("|exponent(0,1) - 2|", std::abs(p01 - 2.0), 0.3);
    rec.check_le("|exponent(1,1) - 2|", std::abs(p11 - 2.0), 0.3);
    rec.check_le("|exponent(0,2) - 3|", std::abs(p02 - 3.0), 0.3);
    rec.note("max|Q_mf2 - Q_exact| N=1024", lo.q_gap);
    rec.note("max|Q_mf2 - Q_exact| N=2048", hi.q_gap);
    rec.check_ge("gap / max|Q_exact| N=1024", lo.q_gap / lo.q_scale, 0.05);
    rec.check_ge("gap / max|Q_exact| N=2048", hi.q_gap / hi.q_scale, 0.05);
    const double spread = std::max(lo.q_gap, hi.q_gap) / std::min(lo.q_gap, hi.q_gap);
    rec.check_le("gap ratio between N (non-vanishing)", spread, 1.5);
}

using Runner = void (*)(Recorder&);

const Runner kRunners[kCriterionCount] = {c1_coefficients,  c2_bessel,  c3_oracle_symmetric, c4_continuum,
                                          c5_special_time,  c6_symmetric_closed, c7_thermodynamic_approach,
                                          c8_g2,            c9_correlation, c10_excitation, c11_asymptotics,
                                          c12_ansatz};

const char* const kTitles[kCriterionCount] = {
    "coefficient identity",        "Bessel identity",           "oracle equivalence, symmetric",
    "continuum exactness, chiral", "special-time structure",    "symmetric closed forms",
    "thermodynamic approach",      "g2 structure",              "correlation field",
    "e1 correction",               "asymptotics",               "hierarchy ansatz scaling"};

}  // namespace

std::vector<int> criteria_for(Level level) {
    std::vector<int> ids;
    const int last = level == Level::Quick ? 6 : kCriterionCount;
    for (int i = 1; i <= last; ++i) ids.push_back(i);
    return ids;
}

std::string criterion_title(int id) {
    if (id < 1 || id > kCriterionCount) throw DomainError("unknown criterion");
    return kTitles[id - 1];
}

CriterionResult run_criterion(int id) {
    CriterionResult result;
    result.id = id;
    result.title = criterion_title(id);
    Recorder rec{result, {}, true};
    const auto start = std::chrono::steady_clock::now();
    try {
        kRunners[id - 1](rec);
        result.passed = rec.ok;
    } catch (const std::exception& e) {
        rec.text << "exception: " << e.what();
        result.passed = false;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.detail = rec.text.str();
    return result;
}

std::vector<CriterionResult> run_suite(Level level) {
    std::vector<CriterionResult> out;
    for (int id : criteria_for(level)) out.push_back(run_criterion(id));
    return out;
}

}  // namespace wqed::verify
