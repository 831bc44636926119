#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace wqed::analytic {

/// Series coefficients of the thermodynamic-limit solutions.
///
///   c_n   power series P = B e^{-t} sum c_n (B h)^n,
///         c_{n+1} / c_n = 2(2n+1) / ((n+1)^2 (n+2)), c_0 = 1
///   c_ij  first-order correlation C1 = e^{-t} sum c_ij x^i y^j h^{i+j+1},
///         c_ij = (c_{i,j-1}/j + c_{i-1,j}/i) / (i+j+1), c_00 = 1
///   d_ij  Dicke-start correction, d_ij = (d_{i,j-1}/j + d_{i-1,j}/i) / (i+j),
///         d_00 = -1
///   u_n   excitation correction e1 = -e^{-t} sum u_n x^n S_n(t),
///         u_n = 2 sum_{i+j=n-1} c_ij / (j+1)
///
/// Terms whose index would go negative are dropped. Entries up to
/// kExactOrder are exact rationals; beyond that the same recurrences run in
/// double precision (all c and d entries have fixed sign, so nothing cancels)
/// up to kMaxOrder.
class CoefficientTable {
public:
    static constexpr std::size_t kExactOrder = 64;
    static constexpr std::size_t kMaxOrder = 160;

    /// Process-wide table, built on first use.
    static const CoefficientTable& get();

    const mpq_class& c_n_exact(std::size_t n) const;
    const mpq_class& c_ij_exact(std::size_t i, std::size_t j) const;
    const mpq_class& d_ij_exact(std::size_t i, std::size_t j) const;
    const mpq_class& u_exact(std::size_t n) const;

    double c_n(std::size_t n) const;
    double c_ij(std::size_t i, std::size_t j) const;
    double d_ij(std::size_t i, std::size_t j) const;
    double u(std::size_t n) const;

    /// q_n = -sum_{i+j=n} d_ij / ((i+1)(j+1)): Dicke-start power in the
    /// chiral limit is P_psi = B e^{-t} sum (c_n + q_n) (B h)^n.
    double dicke_power_coefficient(std::size_t n) const;

    /// 4^n (1/2)_n / ((1)_n (2)_n n!), the Taylor coefficient of
    /// 1F2(1/2; 1, 2; 4 z) at z^n.
    static mpq_class hypergeometric_coefficient(std::size_t n);

private:
    CoefficientTable();

    std::size_t tri(std::size_t i, std::size_t j) const;

    std::vector<mpq_class> cn_q_, cij_q_, dij_q_, u_q_;
    std::vector<double> cn_, cij_, dij_, u_, q_;
};

}  // namespace wqed::analytic
