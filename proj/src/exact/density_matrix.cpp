#include "wqed/exact/density_matrix.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "wqed/core/errors.hpp"

namespace wqed::exact {

DensityMatrix::DensityMatrix(std::size_t n_atoms)
    : n_atoms_(n_atoms), dim_(std::size_t{1} << n_atoms), data_(dim_ * dim_, complex{0.0, 0.0}) {
    if (n_atoms == 0 || n_atoms > 12) throw CapacityError("density matrix supports 1..12 atoms");
}

DensityMatrix DensityMatrix::basis_state(std::size_t n_atoms, std::size_t bits) {
    DensityMatrix rho(n_atoms);
    rho(bits, bits) = 1.0;
    return rho;
}

DensityMatrix DensityMatrix::fully_inverted(std::size_t n_atoms) {
    return basis_state(n_atoms, (std::size_t{1} << n_atoms) - 1);
}

DensityMatrix DensityMatrix::from_pure(std::size_t n_atoms, std::span<const complex> amplitudes) {
    DensityMatrix rho(n_atoms);
    if (amplitudes.size() != rho.dim_) throw DomainError("state vector has wrong dimension");
    for (std::size_t r = 0; r < rho.dim_; ++r)
        for (std::size_t c = 0; c < rho.dim_; ++c) rho(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
    return rho;
}

DensityMatrix DensityMatrix::dicke_minus_one(std::size_t n_atoms) {
    const std::size_t dim = std::size_t{1} << n_atoms;
    std::vector<complex> psi(dim, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n_atoms));
    for (std::size_t n = 0; n < n_atoms; ++n) psi[(dim - 1) ^ (std::size_t{1} << n)] = amp;
    return from_pure(n_atoms, psi);
}

complex DensityMatrix::trace() const {
    complex t = 0.0;
    for (std::size_t s = 0; s < dim_; ++s) t += (*this)(s, s);
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c) worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::excitation(std::size_t atom) const {
    const std::size_t b = bit(atom);
    double acc = 0.0;
    for (std::size_t s = 0; s < dim_; ++s)
        if (s & b) acc += (*this)(s, s).real();
    return acc;
}

complex DensityMatrix::raise_lower(std::size_t i, std::size_t j) const {
    if (i == j) return excitation(i);
    // Tr(sigma^+_i sigma^-_j rho) = sum over s' (j up, i down) of rho(s', s), s = s' - j + i
    const std::size_t bi = bit(i), bj = bit(j);
    complex acc = 0.0;
    for (std::size_t sp = 0; sp < dim_; ++sp) {
        if (!(sp & bj) || (sp & bi)) continue;
        const std::size_t s = (sp ^ bj) | bi;
        acc += (*this)(sp, s);
    }
    return acc;
}

DensityMatrix DensityMatrix::swap_atoms(std::size_t i, std::size_t j) const {
    const std::size_t bi = bit(i), bj = bit(j);
    auto relabel = [&](std::size_t s) {
        const bool vi = s & bi, vj = s & bj;
        if (vi == vj) return s;
        return s ^ bi ^ bj;
    };
    DensityMatrix out(n_atoms_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(relabel(r), relabel(c)) = (*this)(r, c);
    return out;
}

DensityMatrix DensityMatrix::reduced(std::span<const std::size_t> keep) const {
    DensityMatrix out(keep.size());
    std::size_t keep_mask = 0;
    for (std::size_t a : keep) keep_mask |= bit(a);
    auto project = [&](std::size_t s) {
        std::size_t r = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (s & bit(keep[k])) r |= out.bit(k);
        return r;
    };
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if ((r & ~keep_mask) == (c & ~keep_mask)) out(project(r), project(c)) += (*this)(r, c);
    return out;
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double psd_tol) const {
    if (hermiticity_defect() > herm_tol) throw DomainError("density matrix is not Hermitian");
    if (std::abs(trace() - 1.0) > trace_tol) throw DomainError("density matrix is not normalised");
    if (min_eigenvalue() < -psd_tol) throw DomainError("density matrix is not positive semidefinite");
}

DensityMatrix apply_jump(const DensityMatrix& rho, std::span<const complex> coeffs) {
    const std::size_t n = rho.n_atoms(), dim = rho.dim();
    if (coeffs.size() != n) throw DomainError("jump coefficients must match the atom count");
    // left = a rho
    DensityMatrix left(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i] == 0.0) continue;
        const std::size_t b = rho.bit(i);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r & b) continue;
            for (std::size_t c = 0; c < dim; ++c) left(r, c) += coeffs[i] * rho(r | b, c);
        }
    }
    // out = left a^dagger; (X sigma^+_j)(r, c) = X(r, c | j) when c has j down
    DensityMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (coeffs[j] == 0.0) continue;
        const std::size_t b = rho.bit(j);
        const complex cj = std::conj(coeffs[j]);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (!(c & b)) out(r, c) += cj * left(r, c | b);
    }
    return out;
}

}  // namespace wqed::exact
