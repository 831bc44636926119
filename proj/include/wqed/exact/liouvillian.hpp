#pragma once

#include <Eigen/Sparse>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wqed/core/system_config.hpp"
#include "wqed/exact/density_matrix.hpp"

namespace wqed::exact {

inline constexpr std::size_t kMaxAtoms = 8;

/// Single-atom coupling amplitudes r_i = sqrt(beta+_i) e^{-i phi_i} and
/// l_i = sqrt(beta-_i) e^{+i phi_i}, with phi_i = k_1D z_i.
struct Couplings {
    std::vector<complex> right;
    std::vector<complex> left;

    std::size_t n_atoms() const noexcept { return right.size(); }

    /// Uniform couplings from a system config; all phases zero (chiral phases
    /// are a gauge choice, the mirror configuration uses 2 pi spacing).
    static Couplings from_config(const SystemConfig& config);
    /// Per-atom forward/backward probabilities, zero phases.
    static Couplings from_betas(std::span<const double> beta_forward, std::span<const double> beta_backward);
};

/// Sparse generator of the waveguide master equation acting on row-major
/// vec(rho), dimension 4^N.
class Liouvillian {
public:
    using Matrix = Eigen::SparseMatrix<complex, Eigen::RowMajor>;

    Liouvillian(Couplings couplings, Matrix matrix);

    std::size_t n_atoms() const noexcept { return couplings_.n_atoms(); }
    std::size_t dim() const noexcept { return std::size_t{1} << n_atoms(); }
    const Couplings& couplings() const noexcept { return couplings_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    /// out = L[in], both flattened row-major density matrices.
    void apply(std::span<const complex> in, std::span<complex> out) const;
    DensityMatrix apply(const DensityMatrix& rho) const;

    /// max over basis operators of |Tr L[|c><d|]|; zero for a trace-preserving generator.
    double trace_preservation_defect() const;

private:
    Couplings couplings_;
    Matrix matrix_;
};

/// Builds
///   d rho/dt = -i sum_n { r_n^* [s+_n, a_f(n) rho] + l_n^* [s+_n, a_b(n) rho] } + h.c.
///              + sum_n (s-_n rho s+_n - 1/2 {s+_n s-_n, rho})
/// with a_f(n) = -i sum_{i<n} r_i s-_i and a_b(n) = -i sum_{i>n} l_i s-_i.
/// Throws CapacityError for N > 8 and DomainError for negative couplings.
Liouvillian build_liouvillian(const SystemConfig& config);
Liouvillian build_liouvillian(const Couplings& couplings);

}  // namespace wqed::exact
