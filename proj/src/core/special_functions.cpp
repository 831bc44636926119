#include "wqed/core/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "wqed/core/errors.hpp"

namespace wqed {

namespace {

constexpr double kSeriesLimit = 15.0;
constexpr double kOverflowGuard = 700.0;
constexpr int kMaxAsymptoticTerms = 60;

void check_order(int order) {
    if (order != 0 && order != 1) throw DomainError("Bessel order must be 0 or 1");
}

// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k)
double asymptotic_coefficient_ratio(int order, int k) {
    const double mu = 4.0 * order * order;
    const double odd = 2.0 * k - 1.0;
    return (mu - odd * odd) / (8.0 * k);
}

// Ascending series sum_k (x/2)^{2k+nu} / (k! (k+nu)!), positive terms.
double bessel_i_series(int order, double x) {
    const double q = 0.25 * x * x;
    double term = order == 0 ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

// sum_k (-1)^k a_k(nu) / x^k, truncated at the smallest term (>= 10 terms).
double bessel_i_asymptotic_sum(int order, double x) {
    double term = 1.0;
    double sum = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < kMaxAsymptoticTerms; ++k) {
        const double next = -term * asymptotic_coefficient_ratio(order, k) / x;
        if (k >= 10 && std::abs(next) >= last) break;
        term = next;
        sum += term;
        last = std::abs(term);
        if (last < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Difference and sum of the I0 and I1 asymptotic sums, term by term, so that
// I0 - I1 is free of cancellation.
void bessel_i_asymptotic_diff_sum(double x, double& diff, double& sum) {
    double t0 = 1.0, t1 = 1.0;
    diff = 0.0;
    sum = 2.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < kMaxAsymptoticTerms; ++k) {
        const double n0 = -t0 * asymptotic_coefficient_ratio(0, k) / x;
        const double n1 = -t1 * asymptotic_coefficient_ratio(1, k) / x;
        const double mag = std::abs(n0) + std::abs(n1);
        if (k >= 10 && mag >= last) break;
        t0 = n0;
        t1 = n1;
        diff += t0 - t1;
        sum += t0 + t1;
        last = mag;
        if (last < 1e-18 * std::abs(diff)) break;
    }
}

long double bessel_j_series(int order, long double x) {
    const long double q = -0.25L * x * x;
    long double term = order == 0 ? 1.0L : 0.5L * x;
    long double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (k + order));
        sum += term;
        if (std::abs(term) < 1e-22L) break;
    }
    return sum;
}

double bessel_j_asymptotic(int order, double x) {
    // P = sum_k (-1)^k a_{2k} / x^{2k}, Q = sum_k (-1)^k a_{2k+1} / x^{2k+1}
    double a = 1.0;
    double p = 1.0, q = 0.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 2 * kMaxAsymptoticTerms; ++k) {
        const double next = a * asymptotic_coefficient_ratio(order, k) / x;
        if (k >= 10 && std::abs(next) >= last) break;
        a = next;
        last = std::abs(a);
        const int m = k / 2;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0)
            p += sign * a;
        else
            q += sign * a;
        if (last < 1e-18) break;
    }
    const double chi = x - (0.5 * order + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_i_scaled(int order, double x) {
    check_order(order);
    const double ax = std::abs(x);
    double value;
    if (ax <= kSeriesLimit)
        value = bessel_i_series(order, ax) * std::exp(-ax);
    else
        value = bessel_i_asymptotic_sum(order, ax) / std::sqrt(2.0 * std::numbers::pi * ax);
    return (order == 1 && x < 0.0) ? -value : value;
}

double bessel_i(int order, double x) {
    check_order(order);
    const double ax = std::abs(x);
    if (!(ax < kOverflowGuard)) throw RangeError("bessel_i: |x| must be below 700");
    double value;
    if (ax <= kSeriesLimit)
        value = bessel_i_series(order, ax);
    else
        value = std::exp(ax) / std::sqrt(2.0 * std::numbers::pi * ax) * bessel_i_asymptotic_sum(order, ax);
    return (order == 1 && x < 0.0) ? -value : value;
}

double bessel_j(int order, double x) {
    check_order(order);
    const double ax = std::abs(x);
    double value = ax <= kSeriesLimit ? static_cast<double>(bessel_j_series(order, ax))
                                      : bessel_j_asymptotic(order, ax);
    return (order == 1 && x < 0.0) ? -value : value;
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0) || a > 500.0) throw DomainError("lower_incomplete_gamma: need 0 < a <= 500");
    if (!(x >= 0.0)) throw DomainError("lower_incomplete_gamma: need x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double term = 1.0 / a;
        double sum = term;
        for (int n = 0; n < 10000; ++n) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return sum * std::exp(log_prefactor);
    }
    // Modified Lentz evaluation of the continued fraction for Q(a, x).
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double frac = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        frac *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(log_prefactor) * frac;
}

double lower_incomplete_gamma(double a, double x) {
    const double p = regularized_lower_gamma(a, x);
    return p * std::exp(std::lgamma(a));
}

double hyp1f2_half_scaled(double z) {
    if (z < 0.0) return hyp1f2_half(z);
    const double x = std::sqrt(z);
    if (x <= kSeriesLimit) {
        const double i0 = bessel_i_series(0, x);
        const double i1 = bessel_i_series(1, x);
        return (i0 - i1) * (i0 + i1) * std::exp(-2.0 * x);
    }
    double diff, sum;
    bessel_i_asymptotic_diff_sum(x, diff, sum);
    return diff * sum / (2.0 * std::numbers::pi * x);
}

double hyp1f2_half(double z) {
    if (z < 0.0) {
        const double x = std::sqrt(-z);
        const double j0 = bessel_j(0, x);
        const double j1 = bessel_j(1, x);
        return j0 * j0 + j1 * j1;
    }
    const double x = std::sqrt(z);
    if (x <= kSeriesLimit) {
        const double i0 = bessel_i_series(0, x);
        const double i1 = bessel_i_series(1, x);
        return (i0 - i1) * (i0 + i1);
    }
    const double scaled = hyp1f2_half_scaled(z);
    const double log_value = std::log(scaled) + 2.0 * x;
    if (log_value > std::log(std::numeric_limits<double>::max())) return std::numeric_limits<double>::infinity();
    return 2.0 * x < kOverflowGuard ? scaled * std::exp(2.0 * x) : std::exp(log_value);
}

double hyp1f2_half_series(double z) {
    // term ratio: (n + 1/2) z / ((n + 1)^2 (n + 2))
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 2000; ++n) {
        term *= (n + 0.5) * z / ((n + 1.0) * (n + 1.0) * (n + 2.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && n > 2) break;
    }
    return sum;
}

}  // namespace wqed
