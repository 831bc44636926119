#include "wqed/sym/observables.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "wqed/core/errors.hpp"

namespace wqed::sym {

LowMoments low_moments(const MomentVector& m) {
    return {m(1, 0), m(0, 1), m(2, 0), m(1, 1), m(0, 2)};
}

LowMoments low_moments(const Mf2State& s, double beta) {
    const double a01 = beta * s.ctilde;
    return {s.e, a01, s.E, s.e * a01, 2.0 * a01 * a01};
}

double total_power(const LowMoments& m, std::size_t n_atoms, double beta) {
    const double n = static_cast<double>(n_atoms);
    return beta * (n * m.a10 + n * (n - 1.0) * m.a01);
}

double g2_numerator_one_side(const LowMoments& m, std::size_t n_atoms, double beta) {
    const double n = static_cast<double>(n_atoms);
    const double n1 = n - 1.0, n2 = n - 2.0, n3 = n - 3.0;
    // Moments beyond N atoms vanish; the falling factorials already kill them.
    return 0.25 * beta * beta * (2.0 * n * n1 * m.a20 + 4.0 * n * n1 * n2 * m.a11 + n * n1 * n2 * n3 * m.a02);
}

ObservableTrace symmetric_observables(std::span<const double> times, std::span<const LowMoments> moments,
                                      std::size_t n_atoms, double beta) {
    if (times.size() != moments.size()) throw DomainError("times and moments differ in length");
    const std::size_t n = times.size();
    const double b = static_cast<double>(n_atoms) * beta;
    std::vector<double> pr(n), pt(n), gamma(n), g2(n), q(n), exc(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = total_power(moments[k], n_atoms, beta);
        pt[k] = p;
        pr[k] = 0.5 * p;
        gamma[k] = b > 0.0 ? p / (b * std::exp(-times[k])) : 1.0;
        exc[k] = static_cast<double>(n_atoms) * moments[k].a10;
        if (pr[k] < 1e-14) {  // g2 undefined; the power columns stay valid
            g2[k] = q[k] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        g2[k] = g2_numerator_one_side(moments[k], n_atoms, beta) / (pr[k] * pr[k]);
        q[k] = (g2[k] - 2.0) / beta;
    }
    ObservableTrace trace(std::vector<double>(times.begin(), times.end()));
    trace.set_channel(channel::power_right, pr);
    trace.set_channel(channel::power_left, std::move(pr));
    trace.set_channel(channel::power_total, std::move(pt));
    trace.set_channel(channel::gamma_norm, std::move(gamma));
    trace.set_channel(channel::g2_tt, std::move(g2));
    trace.set_channel(channel::q_value, std::move(q));
    trace.set_channel(channel::excitation_mean, std::move(exc));
    trace.metadata()["n_atoms"] = std::to_string(n_atoms);
    trace.metadata()["beta"] = std::to_string(beta);
    return trace;
}

namespace {

std::vector<LowMoments> hierarchy_moments(const Hierarchy& gen, InitialState state, const TimeGrid& grid) {
    const std::size_t cut = gen.layout()->max_order();
    const MomentVector init = state == InitialState::FullyInverted ? inverted_initial(gen.n_atoms(), cut)
                                                                   : dicke_minus_one_initial(gen.n_atoms(), cut);
    std::vector<LowMoments> out;
    out.reserve(grid.output_times.size());
    evolve_exact(gen, init, grid, [&](std::size_t, double, const MomentVector& m) { out.push_back(low_moments(m)); });
    return out;
}

std::vector<LowMoments> mf2_moments(std::size_t n_atoms, double beta, InitialState state, const TimeGrid& grid) {
    std::vector<LowMoments> out;
    for (const auto& s : evolve_mf2(n_atoms, beta, mf2_initial(n_atoms, beta, state), grid))
        out.push_back(low_moments(s, beta));
    return out;
}

void tag(ObservableTrace& trace, const char* solver, InitialState state, const TimeGrid& grid) {
    trace.metadata()["solver"] = solver;
    trace.metadata()["configuration"] = "symmetric_mirror";
    trace.metadata()["initial_state"] = std::string(to_string(state));
    trace.metadata()["rtol"] = std::to_string(grid.rtol);
    trace.metadata()["atol"] = std::to_string(grid.atol);
}

ObservableTrace ratio_trace(const TimeGrid& grid, std::span<const LowMoments> inv, std::span<const LowMoments> psi,
                            std::size_t n_atoms, double beta) {
    std::vector<double> g2(inv.size()), pt(inv.size());
    for (std::size_t k = 0; k < inv.size(); ++k) {
        pt[k] = total_power(inv[k], n_atoms, beta);
        if (pt[k] < 1e-14) throw NormalizationError("waveguide power below 1e-14; g2(0,t) undefined");
        g2[k] = total_power(psi[k], n_atoms, beta) / pt[k];
    }
    ObservableTrace trace(grid.output_times);
    trace.set_channel(channel::g2_0t, std::move(g2));
    trace.set_channel(channel::power_total, std::move(pt));
    return trace;
}

}  // namespace

ObservableTrace simulate_hierarchy(std::size_t n_atoms, double beta, InitialState state, const TimeGrid& grid,
                                   std::size_t max_order) {
    const Hierarchy gen = build_hierarchy(n_atoms, beta, max_order);
    const auto m = hierarchy_moments(gen, state, grid);
    auto trace = symmetric_observables(grid.output_times, m, n_atoms, beta);
    tag(trace, "hierarchy", state, grid);
    trace.metadata()["max_order"] = std::to_string(gen.layout()->max_order());
    return trace;
}

ObservableTrace simulate_mf2(std::size_t n_atoms, double beta, InitialState state, const TimeGrid& grid) {
    const auto m = mf2_moments(n_atoms, beta, state, grid);
    auto trace = symmetric_observables(grid.output_times, m, n_atoms, beta);
    tag(trace, "mf2", state, grid);
    return trace;
}

ObservableTrace g2_zero_t_hierarchy(std::size_t n_atoms, double beta, const TimeGrid& grid) {
    const Hierarchy gen = build_hierarchy(n_atoms, beta);
    const auto inv = hierarchy_moments(gen, InitialState::FullyInverted, grid);
    const auto psi = hierarchy_moments(gen, InitialState::DickeMinusOne, grid);
    auto trace = ratio_trace(grid, inv, psi, n_atoms, beta);
    tag(trace, "hierarchy", InitialState::FullyInverted, grid);
    return trace;
}

ObservableTrace g2_zero_t_mf2(std::size_t n_atoms, double beta, const TimeGrid& grid) {
    const auto inv = mf2_moments(n_atoms, beta, InitialState::FullyInverted, grid);
    const auto psi = mf2_moments(n_atoms, beta, InitialState::DickeMinusOne, grid);
    auto trace = ratio_trace(grid, inv, psi, n_atoms, beta);
    tag(trace, "mf2", InitialState::FullyInverted, grid);
    return trace;
}

EnergyEstimate waveguide_energy(const ObservableTrace& trace) {
    const auto& t = trace.times();
    const auto& p = trace.channel(channel::power_total);
    EnergyEstimate out;
    if (t.size() < 2) {
        out.truncated = true;
        return out;
    }
    for (std::size_t k = 1; k < t.size(); ++k) out.energy += 0.5 * (t[k] - t[k - 1]) * (p[k] + p[k - 1]);

    const std::size_t n = t.size();
    const double p1 = p[n - 2], p2 = p[n - 1];
    if (p2 <= 0.0) {
        out.tail_bound = 0.0;
    } else if (p1 > p2) {
        const double rate = std::log(p1 / p2) / (t[n - 1] - t[n - 2]);
        out.tail_bound = p2 / rate;
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
    }
    out.truncated = out.tail_bound > 1e-6 * out.energy;
    return out;
}

double spectral_abscissa(const Hierarchy& generator) {
    if (generator.n_atoms() > 12) throw CapacityError("dense spectrum check limited to N <= 12");
    const Eigen::MatrixXd dense = Eigen::MatrixXd(generator.matrix());
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, false);
    return solver.eigenvalues().real().maxCoeff();
}

}  // namespace wqed::sym
