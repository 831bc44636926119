#include "wqed/exact/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wqed/core/errors.hpp"
#include "wqed/core/ode.hpp"

namespace wqed::exact {

namespace {

OdeRhs make_rhs(const Liouvillian& L) {
    return [&L](double, std::span<const double> y, std::span<double> dy) {
        const std::size_t n = y.size() / 2;
        L.apply(std::span<const complex>(reinterpret_cast<const complex*>(y.data()), n),
                std::span<complex>(reinterpret_cast<complex*>(dy.data()), n));
    };
}

std::vector<DensityMatrix> run(const DensityMatrix& rho0, const Liouvillian& L, std::span<const double> times,
                               double rtol, double atol) {
    if (rho0.n_atoms() != L.n_atoms()) throw DomainError("state and generator disagree on the atom count");
    std::vector<double> y(2 * rho0.data().size());
    std::copy_n(reinterpret_cast<const double*>(rho0.data().data()), y.size(), y.begin());
    std::vector<DensityMatrix> out;
    out.reserve(times.size());
    OdeOptions opts;
    opts.rtol = rtol;
    opts.atol = atol;
    integrate(make_rhs(L), y, times, opts, [&](std::size_t, double, std::span<const double> state) {
        DensityMatrix rho(rho0.n_atoms());
        std::copy_n(state.data(), state.size(), reinterpret_cast<double*>(rho.data().data()));
        out.push_back(std::move(rho));
    });
    return out;
}

}  // namespace

std::vector<DensityMatrix> evolve(const DensityMatrix& rho0, const Liouvillian& L, const TimeGrid& grid) {
    grid.validate();
    rho0.validate();
    return run(rho0, L, grid.output_times, grid.rtol, grid.atol);
}

std::vector<DensityMatrix> evolve_unnormalized(const DensityMatrix& rho0, const Liouvillian& L,
                                               const TimeGrid& grid) {
    grid.validate();
    return run(rho0, L, grid.output_times, grid.rtol, grid.atol);
}

std::vector<complex> right_output_coefficients(const Couplings& c) {
    std::vector<complex> out;
    for (const auto& r : c.right) out.push_back(complex{0.0, -1.0} * r);
    return out;
}

std::vector<complex> left_output_coefficients(const Couplings& c) {
    std::vector<complex> out;
    for (const auto& l : c.left) out.push_back(complex{0.0, -1.0} * l);
    return out;
}

double mode_occupation(const DensityMatrix& rho, std::span<const complex> coeffs) {
    complex acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0.0) continue;
            acc += std::conj(coeffs[i]) * coeffs[j] * rho.raise_lower(i, j);
        }
    }
    return acc.real();
}

std::pair<double, double> waveguide_power(const DensityMatrix& rho, const Couplings& couplings) {
    const auto right = right_output_coefficients(couplings);
    const auto left = left_output_coefficients(couplings);
    return {mode_occupation(rho, right), mode_occupation(rho, left)};
}

std::pair<double, double> waveguide_power(const DensityMatrix& rho, const SystemConfig& config) {
    return waveguide_power(rho, Couplings::from_config(config));
}

double right_mode_g2_numerator(const DensityMatrix& rho, const Couplings& couplings) {
    const auto a = right_output_coefficients(couplings);
    const DensityMatrix twice = apply_jump(apply_jump(rho, a), a);
    return twice.trace().real();
}

DensityMatrix initial_state(const SystemConfig& config) {
    return config.initial_state() == InitialState::FullyInverted ? DensityMatrix::fully_inverted(config.n_atoms())
                                                                 : DensityMatrix::dicke_minus_one(config.n_atoms());
}

ObservableTrace simulate(const SystemConfig& config, const TimeGrid& grid) {
    const Liouvillian L = build_liouvillian(config);
    const auto traj = evolve(initial_state(config), L, grid);
    const std::size_t n = grid.output_times.size();
    std::vector<double> pr(n), pl(n), ptot(n), gam(n), exc(n), g2tt(n);
    const double b = config.scaled_od();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& rho = traj[k];
        std::tie(pr[k], pl[k]) = waveguide_power(rho, L.couplings());
        ptot[k] = pr[k] + pl[k];
        gam[k] = b > 0.0 ? ptot[k] / (b * std::exp(-grid.output_times[k])) : 1.0;
        double e = 0.0;
        for (std::size_t a = 0; a < config.n_atoms(); ++a) e += rho.excitation(a);
        exc[k] = e;
        g2tt[k] = pr[k] > 1e-14 ? right_mode_g2_numerator(rho, L.couplings()) / (pr[k] * pr[k]) : std::numeric_limits<double>::quiet_NaN();
    }
    ObservableTrace trace(grid.output_times);
    trace.set_channel(channel::power_right, std::move(pr));
    trace.set_channel(channel::power_left, std::move(pl));
    trace.set_channel(channel::power_total, std::move(ptot));
    trace.set_channel(channel::gamma_norm, std::move(gam));
    trace.set_channel(channel::excitation_mean, std::move(exc));
    trace.set_channel(channel::g2_tt, std::move(g2tt));
    trace.metadata()["solver"] = "exact";
    trace.metadata()["configuration"] = std::string(to_string(config.configuration()));
    return trace;
}

ObservableTrace two_time_g2(const SystemConfig& config, const TimeGrid& grid, double t1) {
    grid.validate();
    if (t1 < 0.0) throw DomainError("t1 must be non-negative");
    const Liouvillian L = build_liouvillian(config);
    const auto a = right_output_coefficients(L.couplings());

    // rho(t1)
    DensityMatrix rho_t1 = initial_state(config);
    if (t1 > 0.0) {
        TimeGrid to_t1 = grid;
        to_t1.output_times = {0.0, t1};
        rho_t1 = evolve(rho_t1, L, to_t1).back();
    }
    const double p_t1 = mode_occupation(rho_t1, a);
    if (p_t1 < 1e-14) throw NormalizationError("P_r(t1) vanishes; g2 normalisation is ill-conditioned");

    std::vector<double> later;
    for (double t : grid.output_times)
        if (t >= t1) later.push_back(t);
    if (later.empty() || later.front() != t1) later.insert(later.begin(), t1);
    std::vector<double> shifted;
    for (double t : later) shifted.push_back(t - t1);

    TimeGrid tail = grid;
    tail.output_times = shifted;
    const auto cond = evolve_unnormalized(apply_jump(rho_t1, a), L, tail);
    const auto plain = evolve(rho_t1, L, tail);

    std::vector<double> g2(later.size()), pr(later.size());
    for (std::size_t k = 0; k < later.size(); ++k) {
        pr[k] = mode_occupation(plain[k], a);
        const double num = mode_occupation(cond[k], a);
        g2[k] = pr[k] > 1e-300 ? num / (p_t1 * pr[k]) : 0.0;
    }
    ObservableTrace trace(later);
    trace.set_channel(channel::g2_0t, std::move(g2));
    trace.set_channel(channel::power_right, std::move(pr));
    trace.metadata()["solver"] = "exact";
    trace.metadata()["t1"] = std::to_string(t1);
    return trace;
}

}  // namespace wqed::exact
