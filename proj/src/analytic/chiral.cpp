#include "wqed/analytic/chiral.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "wqed/analytic/coefficients.hpp"
#include "wqed/core/errors.hpp"
#include "wqed/core/hfunc.hpp"
#include "wqed/core/special_functions.hpp"

namespace wqed::analytic {

namespace {

const CoefficientTable& table() { return CoefficientTable::get(); }

void check_kmax(std::size_t k_max) {
    if (k_max + 1 > CoefficientTable::kMaxOrder) throw DomainError("k_max exceeds the coefficient table");
}

SeriesValue flagged(double value, double next, double scale) {
    return {value, next, std::abs(next - value) <= kSeriesTolerance * scale};
}

}  // namespace

double power_chiral(double x, double t) {
    if (x < 0.0) throw DomainError("optical depth must be non-negative");
    if (x == 0.0) return 0.0;
    return x * std::exp(-t) * hyp1f2_half(4.0 * x * h(t));
}

double power_chiral_series(double x, double t, std::size_t k_max) {
    check_kmax(k_max);
    const double s = x * h(t);
    double sum = 0.0, pw = 1.0;
    for (std::size_t n = 0; n <= k_max; ++n, pw *= s) sum += table().c_n(n) * pw;
    return x * std::exp(-t) * sum;
}

SeriesValue c1_series(double x, double y, double t, std::size_t k_max) {
    check_kmax(k_max);
    const double ht = h(t);
    const double sx = x * ht, sy = y * ht;
    double sum = 0.0, magnitude = 0.0, last = 0.0;
    for (std::size_t n = 0; n <= k_max; ++n) {
        double diag = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            diag += table().c_ij(i, n - i) * std::pow(sx, static_cast<double>(i)) *
                    std::pow(sy, static_cast<double>(n - i));
        sum += diag;
        magnitude += std::abs(diag);
        last = diag;
    }
    const double scale = std::exp(-t) * ht;
    return {scale * sum, scale * (sum - last), std::abs(last) <= 1e-12 * magnitude};
}

double c1_field(double x, double y, double t, std::size_t k_max) {
    const auto s = c1_series(x, y, t, k_max);
    if (!s.converged) throw TruncationError("c1_field series not converged at requested k_max");
    return s.value;
}

double c1_edge_bessel(double y, double t) {
    const double ht = h(t);
    const double s = y * ht;
    double ratio;  // I1(2 sqrt s) / sqrt s, continuous through s = 0
    if (std::abs(s) < 1e-8) {
        ratio = 1.0 + s / 2.0;
    } else if (s > 0.0) {
        ratio = bessel_i(1, 2.0 * std::sqrt(s)) / std::sqrt(s);
    } else {
        ratio = bessel_j(1, 2.0 * std::sqrt(-s)) / std::sqrt(-s);
    }
    return std::exp(-t) * ht * ratio;
}

double d_field_series(double x, double t, std::size_t k_max) {
    check_kmax(k_max);
    const double ht = h(t);
    const double s = x * ht;
    double sum = 0.0, pw = 1.0;
    for (std::size_t n = 0; n <= k_max; ++n, pw *= s) {
        double diag = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            diag += table().c_ij(i, n - i) / (static_cast<double>(i + 1) * static_cast<double>(n - i + 1));
        sum += diag * pw;
    }
    return std::exp(-t) * x * x * ht * sum;
}

SeriesValue dicke_power_chiral(double b, double t, std::size_t k_max) {
    check_kmax(k_max);
    const double s = b * h(t);
    double sum = 0.0, pw = 1.0, value = 0.0;
    for (std::size_t n = 0; n <= k_max + 1; ++n, pw *= s) {
        if (n == k_max + 1) value = sum;
        sum += (table().c_n(n) + table().dicke_power_coefficient(n)) * pw;
    }
    const double pre = b * std::exp(-t);
    return flagged(pre * value, pre * sum, std::max(1.0, std::abs(pre * value)));
}

SeriesValue g2_0t_chiral(double b, double t, std::size_t k_max) {
    if (!(b > 0.0)) throw DomainError("g2_0t_chiral needs B > 0");
    const SeriesValue num = dicke_power_chiral(b, t, k_max);
    const double den = power_chiral(b, t);
    if (!(den > 1e-300)) throw NormalizationError("chiral power underflow");
    return flagged(num.value / den, num.next / den, 1.0);
}

double s1_closed(double t) {
    return -0.5 * ((t * t - 4.0 * t + 4.0) - 4.0 * std::exp(-t));
}

double s2_closed(double t) {
    const double et = std::exp(-t);
    return -(12.0 * (t - 1.0) * et + (-t * t * t + 6.0 * t * t - 12.0 * t + 6.0) + 6.0 * et * et) / 3.0;
}

double s_integral_quadrature(std::size_t n, double t) {
    if (t < 0.0) throw DomainError("S_n needs t >= 0");
    if (t == 0.0) return 0.0;
    const double p = static_cast<double>(n);
    auto f = [p](double u) { return std::pow(h(u), p); };
    // Split at t_sp: h changes sign there and odd powers have a kink in magnitude.
    const double tsp = special_time_tsp();
    using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
    if (t <= tsp) return Quad::integrate(f, 0.0, t, 15, 1e-13);
    return Quad::integrate(f, 0.0, tsp, 15, 1e-13) + Quad::integrate(f, tsp, t, 15, 1e-13);
}

double s_integral(std::size_t n, double t) {
    if (n == 0) return t;
    if (n == 1) return s1_closed(t);
    if (n == 2) return s2_closed(t);
    return s_integral_quadrature(n, t);
}

SeriesValue e1_correction(double x, double t, std::size_t k_max) {
    check_kmax(k_max);
    double sum = 0.0, value = 0.0, pw = 1.0;
    for (std::size_t n = 1; n <= k_max + 1; ++n) {
        pw *= x;
        if (n == k_max + 1) value = sum;
        sum += table().u(n) * pw * s_integral(n, t);
    }
    const double pre = -std::exp(-t);
    return flagged(pre * value, pre * sum, std::max(1.0, std::abs(pre * value)));
}

}  // namespace wqed::analytic
