#include "wqed/analytic/symmetric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/special_functions.hpp"

namespace wqed::analytic {

double power_symmetric(double b, double t, double p0) {
    if (!(p0 > 0.0)) throw DomainError("P0 must be positive");
    return p0 * std::exp(-t + b * h(t));
}

double ode_check(double b, std::span<const double> times, std::span<const double> power) {
    if (times.size() != power.size() || times.size() < 3) throw DomainError("ode_check needs >= 3 matching samples");
    double worst = 0.0;
    const std::size_t n = times.size();
    for (std::size_t k = 0; k < n; ++k) {
        double dp;
        if (k == 0) {
            dp = (power[1] - power[0]) / (times[1] - times[0]);
        } else if (k + 1 == n) {
            dp = (power[n - 1] - power[n - 2]) / (times[n - 1] - times[n - 2]);
        } else {
            dp = (power[k + 1] - power[k - 1]) / (times[k + 1] - times[k - 1]);
        }
        const double rate = b + 1.0 - 2.0 * b * std::exp(-times[k]);
        worst = std::max(worst, std::abs(dp + rate * power[k]));
    }
    return worst;
}

double gamma_symmetric(double b, double t) { return std::exp(b * h(t)); }

double gamma_max_symmetric(double b) {
    if (b < 0.0) throw DomainError("B must be non-negative");
    return std::exp(b * (1.0 - std::numbers::ln2));
}

double peak_time_symmetric(double b) {
    if (b <= 1.0) return 0.0;
    return std::log(2.0 * b / (b + 1.0));
}

double p_max_symmetric(double b) {
    if (b < 1.0) throw DomainError("interior maximum needs B >= 1");
    return b * std::exp((b + 1.0) * std::log((b + 1.0) / (2.0 * b)) + b - 1.0);
}

double g2_0t_symmetric(double b, double t) {
    return power_symmetric(b, t, 2.0 * b) / power_symmetric(b, t, b);
}

double energy_closed_form(double b) {
    if (!(b > 0.0)) throw DomainError("B must be positive");
    const double a = b + 1.0;
    const double log_gamma = std::log(regularized_lower_gamma(a, 2.0 * b)) + std::lgamma(a);
    return std::exp(2.0 * b + log_gamma - std::log(2.0) - b * std::log(2.0 * b));
}

double energy_quadrature(double b) {
    if (!(b > 0.0)) throw DomainError("B must be positive");
    auto f = [b](double t) { return power_symmetric(b, t, b); };
    using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double tp = std::max(peak_time_symmetric(b), 0.0);
    // Past t ~ 50 / (B+1) + 40 the integrand is below 1e-17 of its peak.
    const double t_end = tp + 40.0 + 50.0 / (b + 1.0);
    double total = 0.0;
    if (tp > 0.0) total += Quad::integrate(f, 0.0, tp, 20, 1e-14);
    total += Quad::integrate(f, tp, tp + 2.0, 20, 1e-14);
    total += Quad::integrate(f, tp + 2.0, t_end, 20, 1e-14);
    return total;
}

double energy_stirling(double b) { return std::sqrt(std::numbers::pi * b / 2.0) * gamma_max_symmetric(b); }

}  // namespace wqed::analytic
