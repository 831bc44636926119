#pragma once

namespace wqed::analytic {

inline constexpr double kAsymptoticThreshold = 25.0;

/// Leading asymptotics of R(4s) = 1F2(1/2; 1, 2; 4s):
///   s -> +inf : e^{4 sqrt s} / (8 pi s)
///   s -> -inf : (1 - cos(4 sqrt(-s)) / (4 sqrt(-s))) / (pi sqrt(-s))
/// Throws DomainError for |s| < 25.
double asymptotic_hyp1f2(double s);

/// Chiral power from the asymptotic forms with s = x h(t). In the negative
/// regime the late-time composite uses h ~ -(t - 2):
///   x e^{-t} (1 - cos(4 sqrt(x(t-2))) / (4 sqrt(x(t-2)))) / (pi sqrt(x(t-2)))
/// Throws DomainError for |x h(t)| < 25.
double asymptotic_power_chiral(double x, double t);

}  // namespace wqed::analytic
