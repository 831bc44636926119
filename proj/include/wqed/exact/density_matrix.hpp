#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wqed::exact {

using complex = std::complex<double>;

/// Dense 2^N x 2^N state of N two-level atoms.
///
/// Computational basis, atom 0 (the most upstream) is the most significant
/// bit and a set bit means the atom is excited. Storage is row-major, so the
/// flattened index of rho(r, c) is r * dim + c.
class DensityMatrix {
public:
    explicit DensityMatrix(std::size_t n_atoms);

    static DensityMatrix basis_state(std::size_t n_atoms, std::size_t bits);
    static DensityMatrix fully_inverted(std::size_t n_atoms);
    /// Normalised sum_n sigma^-_n |e...e>, the state after one detection.
    static DensityMatrix dicke_minus_one(std::size_t n_atoms);
    static DensityMatrix from_pure(std::size_t n_atoms, std::span<const complex> amplitudes);

    std::size_t n_atoms() const noexcept { return n_atoms_; }
    std::size_t dim() const noexcept { return dim_; }

    complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    std::span<complex> data() noexcept { return data_; }
    std::span<const complex> data() const noexcept { return data_; }

    complex trace() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;

    /// Bit mask of atom `atom` in a basis index.
    std::size_t bit(std::size_t atom) const noexcept { return std::size_t{1} << (n_atoms_ - 1 - atom); }

    /// <n_atom>
    double excitation(std::size_t atom) const;
    /// <sigma^+_i sigma^-_j>
    complex raise_lower(std::size_t i, std::size_t j) const;

    /// Same state with atoms i and j relabelled.
    DensityMatrix swap_atoms(std::size_t i, std::size_t j) const;

    /// Partial trace onto the listed atoms (kept in the given order).
    DensityMatrix reduced(std::span<const std::size_t> keep) const;

    /// Throws DomainError unless Hermitian, unit-trace and PSD within tolerance.
    void validate(double herm_tol = 1e-10, double trace_tol = 1e-9, double psd_tol = 1e-8) const;

private:
    std::size_t n_atoms_;
    std::size_t dim_;
    std::vector<complex> data_;
};

/// sum_i c_i sigma^-_i rho sum_j conj(c_j) sigma^+_j, i.e. a rho a^dagger for
/// the collective lowering operator a = sum_i c_i sigma^-_i.
DensityMatrix apply_jump(const DensityMatrix& rho, std::span<const complex> coeffs);

}  // namespace wqed::exact
