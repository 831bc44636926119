#pragma once

#include <Eigen/Sparse>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "wqed/core/system_config.hpp"

namespace wqed::sym {

inline constexpr std::size_t kMaxHierarchySize = 5'000'000;

/// (p, c): p excitation operators and c raising-lowering pairs, all on
/// distinct atoms, so the order o = p + 2c never exceeds N.
struct MomentIndex {
    std::size_t p = 0;
    std::size_t c = 0;
    std::size_t order() const noexcept { return p + 2 * c; }
};

/// Contiguous enumeration of all admissible (p, c), ordered by o then p.
/// max_order = 0 keeps every order up to N; a smaller value truncates.
class MomentLayout {
public:
    explicit MomentLayout(std::size_t n_atoms, std::size_t max_order = 0);

    /// Number of (p, c) with p + 2c <= max_order.
    static std::size_t count_for(std::size_t max_order);

    std::size_t n_atoms() const noexcept { return n_atoms_; }
    std::size_t max_order() const noexcept { return max_order_; }
    bool truncated() const noexcept { return max_order_ < n_atoms_; }
    std::size_t size() const noexcept { return p_of_.size(); }
    bool contains(std::size_t p, std::size_t c) const noexcept { return p + 2 * c <= max_order_; }
    std::size_t index(std::size_t p, std::size_t c) const;
    MomentIndex at(std::size_t idx) const { return {p_of_[idx], c_of_[idx]}; }

private:
    std::size_t n_atoms_;
    std::size_t max_order_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> p_of_, c_of_;
};

/// Values of A_{p,c} for every admissible index.
class MomentVector {
public:
    explicit MomentVector(std::shared_ptr<const MomentLayout> layout);

    const MomentLayout& layout() const noexcept { return *layout_; }
    std::shared_ptr<const MomentLayout> layout_ptr() const noexcept { return layout_; }
    std::size_t n_atoms() const noexcept { return layout_->n_atoms(); }

    /// A_{p,c}, or 0 when (p, c) is not admissible for this N.
    double operator()(std::size_t p, std::size_t c) const;
    void set(std::size_t p, std::size_t c, double value);

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::shared_ptr<const MomentLayout> layout_;
    std::vector<double> values_;
};

/// Linear, time-independent generator
///   (d/dt + p + c) A_{p,c} = -c N_{2c} beta A_{p,c}
///                            + N_o beta (2c A_{p+1,c} - p A_{p-1,c+1})
///                            + c^2 beta (2 A_{p+2,c-1} - A_{p+1,c-1}),
/// N_i = N - i, for the permutation-symmetric mirror configuration.
class Hierarchy {
public:
    using Matrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

    Hierarchy(std::shared_ptr<const MomentLayout> layout, double beta, Matrix matrix);

    std::size_t n_atoms() const noexcept { return layout_->n_atoms(); }
    double beta() const noexcept { return beta_; }
    std::shared_ptr<const MomentLayout> layout() const noexcept { return layout_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    void apply(std::span<const double> in, std::span<double> out) const;

private:
    std::shared_ptr<const MomentLayout> layout_;
    double beta_;
    Matrix matrix_;
};

/// Throws CapacityError past kMaxHierarchySize moments, DomainError for bad inputs.
///
/// With 0 < max_order < N the hierarchy is cut at that order (moments above
/// it read as zero). The cut is only trustworthy while a second, higher cut
/// gives the same low moments; at B = 10 that holds for t <~ 0.8.
///
/// The generator is strongly non-normal: in double precision the full
/// hierarchy amplifies round-off past |A| <= 1 from N ~ 200 on (B = 10,
/// t = 2). evolve_exact throws StiffnessError when that happens.
Hierarchy build_hierarchy(std::size_t n_atoms, double beta, std::size_t max_order = 0);

/// A_{p,c}(0) = delta_{c,0}.
MomentVector inverted_initial(std::size_t n_atoms, std::size_t max_order = 0);

/// Moments of |psi_{N-1}> ~ sum_n s-_n |e...e>:
/// A_{p,0} = (N - p)/N, A_{p,1} = 1/N, A_{p,c>=2} = 0.
MomentVector dicke_minus_one_initial(std::size_t n_atoms, std::size_t max_order = 0);

using MomentObserver = std::function<void(std::size_t index, double t, const MomentVector& moments)>;

/// Adaptive RK integration; the observer sees every grid time.
void evolve_exact(const Hierarchy& generator, const MomentVector& init, const TimeGrid& grid,
                  const MomentObserver& observer);

/// Stores the full trajectory (only sensible for modest N).
std::vector<MomentVector> evolve_exact(const Hierarchy& generator, const MomentVector& init, const TimeGrid& grid);

}  // namespace wqed::sym
