#pragma once

#include <cstddef>
#include <vector>

namespace wqed::analytic {

/// A truncated series evaluated at k_max and k_max + 1.
struct SeriesValue {
    double value = 0.0;       // sum through k_max
    double next = 0.0;        // sum through k_max + 1
    bool converged = true;    // |next - value| <= tolerance
};

inline constexpr double kSeriesTolerance = 1e-4;

/// P(x, t) = x e^{-t} 1F2(1/2; 1, 2; 4 x h(t)), chiral thermodynamic limit.
double power_chiral(double x, double t);

/// Partial sum x e^{-t} sum_{n <= k_max} c_n (x h)^n.
double power_chiral_series(double x, double t, std::size_t k_max);

/// C1(x, y, t) = e^{-t} sum_{i+j <= k_max} c_ij x^i y^j h^{i+j+1}.
/// Throws TruncationError unless the last anti-diagonal is <= 1e-12 of the
/// summed magnitude.
double c1_field(double x, double y, double t, std::size_t k_max = 64);
/// Non-throwing form; `next` holds the sum through k_max - 1 here.
SeriesValue c1_series(double x, double y, double t, std::size_t k_max = 64);

/// Edge value C1(0, y, t) = e^{-t} h I1(2 sqrt(s)) / sqrt(s), s = y h
/// (J1 form for s < 0).
double c1_edge_bessel(double y, double t);

/// D(x, t) = double integral of C1 over [0, x]^2, from the c_ij series.
double d_field_series(double x, double t, std::size_t k_max = 64);

/// Power from |psi_{N-1}> in the chiral limit:
/// B e^{-t} sum_n (c_n + q_n) (B h)^n, q from the d_ij table.
SeriesValue dicke_power_chiral(double b, double t, std::size_t k_max);

/// g2(0, t) = P_psi(B, t) / P(B, t); flagged when k_max and k_max + 1
/// disagree by more than kSeriesTolerance.
SeriesValue g2_0t_chiral(double b, double t, std::size_t k_max = 36);

/// S_n(t) = int_0^t h^n. n = 1, 2 use the closed forms, larger n adaptive
/// Gauss-Kronrod quadrature.
double s_integral(std::size_t n, double t);
double s1_closed(double t);
double s2_closed(double t);
double s_integral_quadrature(std::size_t n, double t);

/// e1(x, t) = -e^{-t} sum_{n=1}^{k_max} u_n x^n S_n(t); the flag compares
/// against k_max + 1 relative to max(1, |e1|).
SeriesValue e1_correction(double x, double t, std::size_t k_max = 40);

}  // namespace wqed::analytic
