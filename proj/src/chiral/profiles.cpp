#include "wqed/chiral/profiles.hpp"

#include <cmath>
#include <limits>

#include "wqed/core/errors.hpp"

namespace wqed::chiral {

namespace {

// Square-domain trapezoid integrals I(x_m) = iint_{[0,x_m]^2} f for all m,
// f symmetric and given through a callable f(i, j). O(M^2).
template <class F>
std::vector<double> cumulative_square_integrals(std::size_t m, double dx, F f) {
    // s[a][b] = int_0^{x_b} f(x_a, y) dy, built column by column.
    std::vector<double> s(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 1; b < m; ++b)
            s[a * m + b] = s[a * m + b - 1] + 0.5 * dx * (f(a, b - 1) + f(a, b));
    std::vector<double> out(m, 0.0);
    for (std::size_t b = 1; b < m; ++b) {
        double acc = 0.5 * (s[b] + s[b * m + b]);
        for (std::size_t a = 1; a < b; ++a) acc += s[a * m + b];
        out[b] = acc * dx;
    }
    return out;
}

std::vector<double> cumulative_line_integrals(std::span<const double> f, double dx) {
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t k = 1; k < f.size(); ++k) out[k] = out[k - 1] + 0.5 * dx * (f[k - 1] + f[k]);
    return out;
}

}  // namespace

std::vector<double> power_profile(const ContinuumState& state) {
    const auto& g = state.grid();
    auto p = cumulative_line_integrals(state.e_values(), g.dx());
    const auto d = cumulative_square_integrals(g.size(), g.dx(), [&](std::size_t i, std::size_t j) { return state.ct(i, j); });
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += d[k];
    return p;
}

double output_power(const ContinuumState& state) {
    const auto& g = state.grid();
    const std::size_t m = g.size();
    const double dx = g.dx();
    double line = 0.0;
    for (std::size_t k = 0; k < m; ++k) line += (k == 0 || k + 1 == m ? 0.5 : 1.0) * state.e(k);
    double sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double wi = (i == 0 || i + 1 == m) ? 0.5 : 1.0;
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += ((j == 0 || j + 1 == m) ? 0.5 : 1.0) * state.ct(i, j);
        sq += wi * row;
    }
    return line * dx + sq * dx * dx;
}

QProfile q_profile(const ContinuumState& state) {
    const auto& g = state.grid();
    const auto p = power_profile(state);
    const auto cum = cumulative_square_integrals(
        g.size(), g.dx(), [&](std::size_t i, std::size_t j) { return state.E(i, j) - state.e(i) * state.e(j); });
    QProfile out;
    out.q.resize(p.size());
    out.g2.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out.q[k] = 2.0 * p[k] * p[k] + 2.0 * cum[k];
        if (k == 0) {
            out.g2[k] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        if (p[k] < 1e-14) throw NormalizationError("power below 1e-14; g2(t,t) undefined");
        out.g2[k] = out.q[k] / (p[k] * p[k]);
    }
    return out;
}

std::vector<double> gamma_norm(std::span<const double> power, std::span<const double> times, double scaled_od) {
    if (power.size() != times.size()) throw DomainError("power and times differ in length");
    if (!(scaled_od > 0.0)) throw DomainError("gamma_norm needs B > 0");
    std::vector<double> out(power.size());
    for (std::size_t k = 0; k < power.size(); ++k) out[k] = power[k] / (scaled_od * std::exp(-times[k]));
    return out;
}

}  // namespace wqed::chiral
