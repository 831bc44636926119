#include "wqed/chiral/continuum.hpp"

#include <algorithm>
#include <cmath>

#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/ode.hpp"

namespace wqed::chiral {

OpticalGrid::OpticalGrid(double scaled_od, std::size_t points) : b_(scaled_od), m_(points) {
    if (points < 33) throw DomainError("optical grid needs at least 33 points");
    if (!(scaled_od > 0.0)) throw DomainError("optical depth must be positive");
    dx_ = scaled_od / static_cast<double>(points - 1);
}

ContinuumState::ContinuumState(const OpticalGrid& grid)
    : grid_(grid), e_(grid.size(), 0.0), ct_(packed_size(grid.size()), 0.0), E_(packed_size(grid.size()), 0.0) {}

std::size_t ContinuumState::packed_index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    const std::size_t m = grid_.size();
    return i * m - i * (i - 1) / 2 + (j - i);
}

namespace {

// Row-wise cumulative trapezoid R[a][b] = int_0^{x_b} Ct(x_a, y) dy.
class RowIntegrals {
public:
    explicit RowIntegrals(std::size_t m) : m_(m), full_(m * m), r_(m * m) {}

    void compute(std::span<const double> packed, double dx) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i; j < m_; ++j, ++k) full_[i * m_ + j] = full_[j * m_ + i] = packed[k];
        const double half = 0.5 * dx;
        for (std::size_t a = 0; a < m_; ++a) {
            const double* row = &full_[a * m_];
            double* out = &r_[a * m_];
            out[0] = 0.0;
            for (std::size_t b = 1; b < m_; ++b) out[b] = out[b - 1] + half * (row[b - 1] + row[b]);
        }
    }

    double operator()(std::size_t a, std::size_t b) const { return r_[a * m_ + b]; }

private:
    std::size_t m_;
    std::vector<double> full_, r_;
};

double initial_ct(const OpticalGrid& grid, InitialState init) {
    return init == InitialState::DickeMinusOne ? 1.0 / grid.scaled_od() : 0.0;
}

OdeOptions options_from(const TimeGrid& times) {
    OdeOptions o;
    o.rtol = times.rtol;
    o.atol = times.atol;
    return o;
}

}  // namespace

void evolve_limit(const OpticalGrid& grid, InitialState init, const TimeGrid& times,
                  const ContinuumObserver& observer) {
    times.validate();
    const std::size_t m = grid.size();
    const std::size_t n = ContinuumState::packed_size(m);
    const double dx = grid.dx();
    RowIntegrals r(m);

    auto rhs = [&](double t, std::span<const double> y, std::span<double> dy) {
        r.compute(y, dx);
        const double drive = h_prime(t);
        const double source = 2.0 * std::exp(-2.0 * t) - std::exp(-t);
        std::size_t k = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j, ++k) dy[k] = -y[k] + drive * (r(i, j) + r(j, i)) + source;
    };

    std::vector<double> y(n, initial_ct(grid, init));
    ContinuumState state(grid);
    integrate(rhs, y, times.output_times, options_from(times), [&](std::size_t idx, double t, std::span<const double> v) {
        std::copy(v.begin(), v.end(), state.ct_packed().begin());
        std::fill(state.e_values().begin(), state.e_values().end(), std::exp(-t));
        std::fill(state.E_packed().begin(), state.E_packed().end(), std::exp(-2.0 * t));
        observer(idx, t, state);
    });
}

std::vector<ContinuumState> evolve_limit(const OpticalGrid& grid, InitialState init, const TimeGrid& times) {
    std::vector<ContinuumState> out;
    evolve_limit(grid, init, times, [&](std::size_t, double, const ContinuumState& s) { out.push_back(s); });
    return out;
}

ContinuumSummary evolve_finite_beta(const OpticalGrid& grid, double beta, InitialState init, const TimeGrid& times,
                                    const ContinuumObserver& observer) {
    times.validate();
    if (!(beta >= 0.0) || beta > 1.0) throw DomainError("beta must lie in [0, 1]");
    const std::size_t m = grid.size();
    if (beta * static_cast<double>(m - 1) / grid.scaled_od() > 1.0 + 1e-12)
        throw DomainError("grid spacing finer than the atom spacing (beta (M-1)/B > 1)");
    const std::size_t n = ContinuumState::packed_size(m);
    const double dx = grid.dx();
    RowIntegrals r(m);

    // Layout: e[0..m) | Ct packed | E packed
    auto rhs = [&](double, std::span<const double> y, std::span<double> dy) {
        const double* e = y.data();
        const auto ct = y.subspan(m, n);
        const double* E = y.data() + m + n;
        r.compute(ct, dx);
        for (std::size_t i = 0; i < m; ++i) dy[i] = -e[i] - 2.0 * beta * r(i, i);
        std::size_t k = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j, ++k) {
                dy[m + k] = -ct[k] + (2.0 * e[j] - 1.0) * r(i, j) + (2.0 * e[i] - 1.0) * r(j, i) + 2.0 * E[k] - e[i];
                dy[m + n + k] = -2.0 * E[k] - 2.0 * beta * (e[i] * r(j, j) + e[j] * r(i, i));
            }
        }
    };

    std::vector<double> y(m + 2 * n);
    const double b = grid.scaled_od();
    const bool dicke = init == InitialState::DickeMinusOne;
    std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m), dicke ? 1.0 - beta / b : 1.0);
    std::fill(y.begin() + static_cast<std::ptrdiff_t>(m), y.begin() + static_cast<std::ptrdiff_t>(m + n),
              initial_ct(grid, init));
    std::fill(y.begin() + static_cast<std::ptrdiff_t>(m + n), y.end(), dicke ? 1.0 - 2.0 * beta / b : 1.0);

    ContinuumSummary summary;
    ContinuumState state(grid);
    integrate(rhs, y, times.output_times, options_from(times), [&](std::size_t idx, double t, std::span<const double> v) {
        std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), state.e_values().begin());
        std::copy(v.begin() + static_cast<std::ptrdiff_t>(m), v.begin() + static_cast<std::ptrdiff_t>(m + n),
                  state.ct_packed().begin());
        std::copy(v.begin() + static_cast<std::ptrdiff_t>(m + n), v.end(), state.E_packed().begin());
        double peak = 0.0;
        for (double c : state.ct_packed()) peak = std::max(peak, std::abs(c));
        summary.max_beta_ct = std::max(summary.max_beta_ct, beta * peak);
        if (beta * peak > 0.5 && summary.physical) {
            summary.physical = false;
            summary.first_violation_time = t;
        }
        observer(idx, t, state);
    });
    return summary;
}

std::vector<ContinuumState> evolve_finite_beta(const OpticalGrid& grid, double beta, InitialState init,
                                               const TimeGrid& times, ContinuumSummary* summary) {
    std::vector<ContinuumState> out;
    const auto s = evolve_finite_beta(grid, beta, init, times,
                                      [&](std::size_t, double, const ContinuumState& st) { out.push_back(st); });
    if (summary) *summary = s;
    return out;
}

}  // namespace wqed::chiral
