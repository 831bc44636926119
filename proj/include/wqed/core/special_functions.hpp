#pragma once

namespace wqed {

/// Modified Bessel function of the first kind, order 0 or 1.
///
/// Ascending series for |x| <= 15, Hankel-type asymptotic expansion beyond
/// (optimally truncated, at least ten terms). Throws RangeError for
/// |x| >= 700 where I_nu overflows.
double bessel_i(int order, double x);

/// e^{-|x|} I_nu(x); finite for all x.
double bessel_i_scaled(int order, double x);

/// Bessel function of the first kind, order 0 or 1.
///
/// Alternating series (extended precision) for |x| <= 15, asymptotic
/// P/Q expansion beyond.
double bessel_j(int order, double x);

/// Lower incomplete gamma function gamma(a, x) = int_0^x t^{a-1} e^{-t} dt.
/// Requires 0 < a <= 500, x >= 0. Overflows to +inf for very large a.
double lower_incomplete_gamma(double a, double x);

/// Regularised P(a, x) = gamma(a, x) / Gamma(a).
double regularized_lower_gamma(double a, double x);

/// 1F2(1/2; 1, 2; z) via the Bessel identity:
///   z >= 0 : I0(sqrt z)^2 - I1(sqrt z)^2
///   z <  0 : J0(sqrt -z)^2 + J1(sqrt -z)^2
/// Returns +inf once the value exceeds the double range (z > ~1.3e5).
double hyp1f2_half(double z);

/// e^{-2 sqrt(z)} 1F2(1/2; 1, 2; z) for z >= 0 (equals hyp1f2_half for z < 0).
double hyp1f2_half_scaled(double z);

/// Direct Taylor summation of 1F2(1/2; 1, 2; z). Cross-check only; cancels
/// catastrophically for large negative z.
double hyp1f2_half_series(double z);

}  // namespace wqed
