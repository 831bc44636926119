#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wqed {

struct OdeOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    double initial_step = 0.0;  // 0 selects a step automatically
    double max_step = 0.0;      // 0 means unbounded
    std::size_t max_steps = 50'000'000;
};

struct OdeStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t rhs_evaluations = 0;
};

/// dy/dt = f(t, y); writes f into the last argument.
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// Dormand-Prince 5(4) explicit Runge-Kutta with embedded error control.
///
/// The step size persists between integrate_to calls so that stepping
/// through a dense list of output times does not restart the controller.
/// Throws StiffnessError when the step size underflows.
class DormandPrince45 {
public:
    DormandPrince45(OdeRhs rhs, std::size_t dim, OdeOptions options = {});

    /// Advances (t, y) in place to exactly t_end.
    void integrate_to(double& t, std::span<double> y, double t_end);

    const OdeStats& stats() const noexcept { return stats_; }
    const OdeOptions& options() const noexcept { return options_; }

private:
    double initial_step(double t, std::span<const double> y, double t_end);
    double error_norm(std::span<const double> y, std::span<const double> y_new) const;

    OdeRhs rhs_;
    std::size_t dim_;
    OdeOptions options_;
    OdeStats stats_;
    double step_ = 0.0;
    std::vector<double> k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, y_new_, err_;
};

/// Integrates from times.front() through every entry of `times`, invoking
/// observer(index, t, y) at each (including the initial time).
void integrate(const OdeRhs& rhs, std::vector<double>& y, std::span<const double> times, const OdeOptions& options,
               const std::function<void(std::size_t, double, std::span<const double>)>& observer);

}  // namespace wqed
