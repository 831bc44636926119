#include "wqed/core/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wqed/core/errors.hpp"

namespace wqed {

namespace {

// Dormand & Prince (1980) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
// b (5th order) equals the a7 row; e = b - b_hat.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 10.0;

}  // namespace

DormandPrince45::DormandPrince45(OdeRhs rhs, std::size_t dim, OdeOptions options)
    : rhs_(std::move(rhs)), dim_(dim), options_(options),
      k1_(dim), k2_(dim), k3_(dim), k4_(dim), k5_(dim), k6_(dim), k7_(dim), tmp_(dim), y_new_(dim), err_(dim) {
    if (!(options_.rtol > 0.0) || !(options_.atol > 0.0)) throw DomainError("ODE tolerances must be positive");
}

double DormandPrince45::error_norm(std::span<const double> y, std::span<const double> y_new) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double scale = options_.atol + options_.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        const double r = err_[i] / scale;
        acc += r * r;
    }
    return dim_ == 0 ? 0.0 : std::sqrt(acc / static_cast<double>(dim_));
}

double DormandPrince45::initial_step(double t, std::span<const double> y, double t_end) {
    // standard starting-step heuristic from two trial derivative evaluations
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double sc = options_.atol + options_.rtol * std::abs(y[i]);
        d0 += (y[i] / sc) * (y[i] / sc);
        d1 += (k1_[i] / sc) * (k1_[i] / sc);
    }
    d0 = std::sqrt(d0 / dim_);
    d1 = std::sqrt(d1 / dim_);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, std::abs(t_end - t));
    for (std::size_t i = 0; i < dim_; ++i) tmp_[i] = y[i] + h0 * k1_[i];
    rhs_(t + h0, tmp_, k2_);
    ++stats_.rhs_evaluations;
    double d2 = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double sc = options_.atol + options_.rtol * std::abs(y[i]);
        const double v = (k2_[i] - k1_[i]) / sc;
        d2 += v * v;
    }
    d2 = std::sqrt(d2 / dim_) / h0;
    const double dmax = std::max(d1, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min(100.0 * h0, h1);
}

void DormandPrince45::integrate_to(double& t, std::span<double> y, double t_end) {
    if (y.size() != dim_) throw DomainError("ODE state has wrong dimension");
    if (t_end == t) return;
    if (t_end < t) throw DomainError("integrate_to only supports forward integration");

    rhs_(t, y, k1_);
    ++stats_.rhs_evaluations;
    if (step_ <= 0.0) step_ = options_.initial_step > 0.0 ? options_.initial_step : initial_step(t, y, t_end);

    while (t < t_end) {
        if (stats_.accepted + stats_.rejected >= options_.max_steps)
            throw StiffnessError("ODE step budget exhausted", t);
        double h = step_;
        if (options_.max_step > 0.0) h = std::min(h, options_.max_step);
        bool last = false;
        if (t + h >= t_end || t + 1.01 * h >= t_end) {
            h = t_end - t;
            last = true;
        }
        const double min_step = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
        if (h < min_step) {
            std::ostringstream msg;
            msg << "step size underflow at t = " << t;
            throw StiffnessError(msg.str(), t);
        }

        const std::size_t n = dim_;
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * a21 * k1_[i];
        rhs_(t + c2 * h, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * (a31 * k1_[i] + a32 * k2_[i]);
        rhs_(t + c3 * h, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * (a41 * k1_[i] + a42 * k2_[i] + a43 * k3_[i]);
        rhs_(t + c4 * h, tmp_, k4_);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + h * (a51 * k1_[i] + a52 * k2_[i] + a53 * k3_[i] + a54 * k4_[i]);
        rhs_(t + c5 * h, tmp_, k5_);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + h * (a61 * k1_[i] + a62 * k2_[i] + a63 * k3_[i] + a64 * k4_[i] + a65 * k5_[i]);
        const double t_new = last ? t_end : t + h;
        rhs_(t_new, tmp_, k6_);
        for (std::size_t i = 0; i < n; ++i)
            y_new_[i] = y[i] + h * (a71 * k1_[i] + a73 * k3_[i] + a74 * k4_[i] + a75 * k5_[i] + a76 * k6_[i]);
        rhs_(t_new, y_new_, k7_);
        stats_.rhs_evaluations += 6;

        for (std::size_t i = 0; i < n; ++i)
            err_[i] = h * (e1 * k1_[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] + e6 * k6_[i] + e7 * k7_[i]);
        const double err = error_norm(y, y_new_);
        if (!std::isfinite(err)) {
            ++stats_.rejected;
            step_ = 0.25 * h;
            continue;
        }

        if (err <= 1.0) {
            ++stats_.accepted;
            std::copy(y_new_.begin(), y_new_.end(), y.begin());
            k1_.swap(k7_);
            t = t_new;
            const double fac = err == 0.0 ? kFacMax : std::clamp(kSafety * std::pow(err, -0.2), kFacMin, kFacMax);
            // Keep the controller's natural step if this one was clipped to hit t_end.
            if (!last || fac * h > step_) step_ = fac * h;
        } else {
            ++stats_.rejected;
            step_ = h * std::max(kFacMin, kSafety * std::pow(err, -0.2));
        }
    }
}

void integrate(const OdeRhs& rhs, std::vector<double>& y, std::span<const double> times, const OdeOptions& options,
               const std::function<void(std::size_t, double, std::span<const double>)>& observer) {
    if (times.empty()) return;
    DormandPrince45 stepper(rhs, y.size(), options);
    double t = times.front();
    observer(0, t, y);
    for (std::size_t k = 1; k < times.size(); ++k) {
        stepper.integrate_to(t, y, times[k]);
        observer(k, t, y);
    }
}

}  // namespace wqed
