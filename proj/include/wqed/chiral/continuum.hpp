#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "wqed/core/system_config.hpp"

namespace wqed::chiral {

/// Uniform optical-depth nodes x_m = m dx on [0, B], dx = B / (M - 1).
class OpticalGrid {
public:
    OpticalGrid(double scaled_od, std::size_t points);

    double scaled_od() const noexcept { return b_; }
    std::size_t size() const noexcept { return m_; }
    double dx() const noexcept { return dx_; }
    double x(std::size_t m) const noexcept { return static_cast<double>(m) * dx_; }

private:
    double b_;
    std::size_t m_;
    double dx_;
};

/// e(x), Ct(x,y) = C/beta and E(x,y) on the grid. The two-point fields are
/// stored as packed upper triangles, so exchange symmetry holds by
/// construction.
class ContinuumState {
public:
    explicit ContinuumState(const OpticalGrid& grid);

    const OpticalGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return grid_.size(); }
    static std::size_t packed_size(std::size_t m) { return m * (m + 1) / 2; }
    std::size_t packed_index(std::size_t i, std::size_t j) const noexcept;

    double e(std::size_t i) const { return e_[i]; }
    double ct(std::size_t i, std::size_t j) const { return ct_[packed_index(i, j)]; }
    double E(std::size_t i, std::size_t j) const { return E_[packed_index(i, j)]; }

    std::vector<double>& e_values() noexcept { return e_; }
    std::vector<double>& ct_packed() noexcept { return ct_; }
    std::vector<double>& E_packed() noexcept { return E_; }
    const std::vector<double>& e_values() const noexcept { return e_; }
    const std::vector<double>& ct_packed() const noexcept { return ct_; }
    const std::vector<double>& E_packed() const noexcept { return E_; }

private:
    OpticalGrid grid_;
    std::vector<double> e_, ct_, E_;
};

/// Physicality monitor: beta |Ct| must stay within 1/2.
struct ContinuumSummary {
    bool physical = true;
    double max_beta_ct = 0.0;
    double first_violation_time = std::numeric_limits<double>::quiet_NaN();
};

using ContinuumObserver = std::function<void(std::size_t index, double t, const ContinuumState& state)>;

/// beta -> 0: e = e^{-t}, E = e^{-2t} frozen and
///   (d/dt + 1) Ct = h'(t) [int_0^y Ct(x,y') dy' + (x <-> y)] + 2e^{-2t} - e^{-t}.
/// Ct(0) = 0 (inverted) or 1/B (Dicke minus one).
void evolve_limit(const OpticalGrid& grid, InitialState init, const TimeGrid& times,
                  const ContinuumObserver& observer);
std::vector<ContinuumState> evolve_limit(const OpticalGrid& grid, InitialState init, const TimeGrid& times);

/// Full nonlinear MF2 continuum system at coupling beta:
///   (d/dt + 1) e  = -2 beta int_0^x Ct(x,x') dx'
///   (d/dt + 1) Ct = [2e(y) - 1] int_0^y Ct(x,y') dy' + (x <-> y) + 2E - e(min(x,y))
///   (d/dt + 2) E  = -2 beta e(x) int_0^y Ct(y,y') dy' + (x <-> y)
/// Requires beta (M - 1) / B <= 1 (grid no finer than the atom spacing).
ContinuumSummary evolve_finite_beta(const OpticalGrid& grid, double beta, InitialState init, const TimeGrid& times,
                                    const ContinuumObserver& observer);
std::vector<ContinuumState> evolve_finite_beta(const OpticalGrid& grid, double beta, InitialState init,
                                               const TimeGrid& times, ContinuumSummary* summary = nullptr);

}  // namespace wqed::chiral
