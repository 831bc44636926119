#include "wqed/analytic/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"

namespace wqed::analytic {

namespace {

double oscillatory(double r) {
    const double phase = 4.0 * std::sqrt(r);
    return (1.0 - std::cos(phase) / phase) / (std::numbers::pi * std::sqrt(r));
}

}  // namespace

double asymptotic_hyp1f2(double s) {
    if (std::abs(s) < kAsymptoticThreshold) throw DomainError("asymptotic form needs |s| >= 25");
    if (s > 0.0) return std::exp(4.0 * std::sqrt(s)) / (8.0 * std::numbers::pi * s);
    return oscillatory(-s);
}

double asymptotic_power_chiral(double x, double t) {
    const double s = x * h(t);
    if (std::abs(s) < kAsymptoticThreshold) throw DomainError("asymptotic form needs |x h(t)| >= 25");
    if (s > 0.0) return x * std::exp(-t) * asymptotic_hyp1f2(s);
    const double r = x * (t - 2.0);
    if (r <= 0.0) throw DomainError("late-time form needs t > 2");
    return x * std::exp(-t) * oscillatory(r);
}

}  // namespace wqed::analytic
