#include "wqed/sym/hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "wqed/core/errors.hpp"
#include "wqed/core/ode.hpp"

namespace wqed::sym {

MomentLayout::MomentLayout(std::size_t n_atoms, std::size_t max_order)
    : n_atoms_(n_atoms), max_order_(max_order == 0 ? n_atoms : std::min(max_order, n_atoms)) {
    if (n_atoms == 0) throw DomainError("hierarchy needs at least one atom");
    const std::size_t total = count_for(max_order_);
    if (total > kMaxHierarchySize) throw CapacityError("moment hierarchy exceeds 5e6 entries; use MF2 or a lower order");
    offsets_.resize(max_order_ + 2);
    p_of_.reserve(total);
    c_of_.reserve(total);
    for (std::size_t o = 0; o <= max_order_; ++o) {
        offsets_[o] = p_of_.size();
        for (std::size_t p = o % 2; p <= o; p += 2) {
            p_of_.push_back(p);
            c_of_.push_back((o - p) / 2);
        }
    }
    offsets_[max_order_ + 1] = p_of_.size();
}

std::size_t MomentLayout::count_for(std::size_t max_order) {
    std::size_t total = 0;
    for (std::size_t o = 0; o <= max_order; ++o) total += o / 2 + 1;
    return total;
}

std::size_t MomentLayout::index(std::size_t p, std::size_t c) const {
    const std::size_t o = p + 2 * c;
    if (o > max_order_) throw DomainError("moment index outside the hierarchy");
    return offsets_[o] + (p - o % 2) / 2;
}

MomentVector::MomentVector(std::shared_ptr<const MomentLayout> layout)
    : layout_(std::move(layout)), values_(layout_->size(), 0.0) {}

double MomentVector::operator()(std::size_t p, std::size_t c) const {
    return layout_->contains(p, c) ? values_[layout_->index(p, c)] : 0.0;
}

void MomentVector::set(std::size_t p, std::size_t c, double value) { values_[layout_->index(p, c)] = value; }

Hierarchy::Hierarchy(std::shared_ptr<const MomentLayout> layout, double beta, Matrix matrix)
    : layout_(std::move(layout)), beta_(beta), matrix_(std::move(matrix)) {}

void Hierarchy::apply(std::span<const double> in, std::span<double> out) const {
    const auto n = static_cast<Eigen::Index>(in.size());
    Eigen::Map<const Eigen::VectorXd> x(in.data(), n);
    Eigen::Map<Eigen::VectorXd> y(out.data(), n);
    y.noalias() = matrix_ * x;
}

Hierarchy build_hierarchy(std::size_t n_atoms, double beta, std::size_t max_order) {
    if (!(beta >= 0.0) || beta > 1.0) throw DomainError("beta must lie in [0, 1]");
    auto layout = std::make_shared<const MomentLayout>(n_atoms, max_order);
    const std::size_t top = layout->max_order();
    const std::size_t size = layout->size();
    const double n = static_cast<double>(n_atoms);

    Hierarchy::Matrix m(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    m.reserve(Eigen::VectorXi::Constant(static_cast<Eigen::Index>(size), 5));
    for (std::size_t row = 0; row < size; ++row) {
        const auto [p, c] = layout->at(row);
        const std::size_t o = p + 2 * c;
        const double pd = static_cast<double>(p), cd = static_cast<double>(c);
        const auto r = static_cast<Eigen::Index>(row);
        auto put = [&](std::size_t pp, std::size_t cc, double v) {
            if (v != 0.0) m.insert(r, static_cast<Eigen::Index>(layout->index(pp, cc))) = v;
        };
        put(p, c, -(pd + cd) - cd * (n - 2.0 * cd) * beta);
        if (o < top) {  // at a truncated top order the o + 1 moments are set to zero
            const double no_beta = (n - static_cast<double>(o)) * beta;
            if (c > 0) put(p + 1, c, 2.0 * cd * no_beta);
            if (p > 0) put(p - 1, c + 1, -pd * no_beta);
        }
        if (c > 0) {
            put(p + 2, c - 1, 2.0 * cd * cd * beta);
            put(p + 1, c - 1, -cd * cd * beta);
        }
    }
    m.makeCompressed();
    return Hierarchy(std::move(layout), beta, std::move(m));
}

MomentVector inverted_initial(std::size_t n_atoms, std::size_t max_order) {
    MomentVector v(std::make_shared<const MomentLayout>(n_atoms, max_order));
    for (std::size_t p = 0; p <= v.layout().max_order(); ++p) v.set(p, 0, 1.0);
    return v;
}

MomentVector dicke_minus_one_initial(std::size_t n_atoms, std::size_t max_order) {
    if (n_atoms < 2) throw DomainError("the Dicke state |psi_{N-1}> needs N >= 2");
    MomentVector v(std::make_shared<const MomentLayout>(n_atoms, max_order));
    const double n = static_cast<double>(n_atoms);
    const std::size_t top = v.layout().max_order();
    for (std::size_t p = 0; p <= top; ++p) v.set(p, 0, (n - static_cast<double>(p)) / n);
    for (std::size_t p = 0; p + 2 <= top; ++p) v.set(p, 1, 1.0 / n);
    return v;
}

void evolve_exact(const Hierarchy& generator, const MomentVector& init, const TimeGrid& grid,
                  const MomentObserver& observer) {
    grid.validate();
    if (init.layout().size() != generator.layout()->size()) throw DomainError("initial moments do not match");
    MomentVector state(generator.layout());
    std::copy(init.values().begin(), init.values().end(), state.values().begin());
    std::vector<double> y(state.values().begin(), state.values().end());
    const std::size_t low = std::min(MomentLayout::count_for(4), y.size());
    OdeOptions opts;
    opts.rtol = grid.rtol;
    opts.atol = grid.atol;
    integrate([&generator](double, std::span<const double> in, std::span<double> out) { generator.apply(in, out); },
              y, grid.output_times, opts, [&](std::size_t k, double t, std::span<const double> values) {
                  // |A_{p,c}| <= 1 for any state; past that, round-off has been amplified
                  // by the non-normal generator and the trajectory is meaningless.
                  // Only orders <= 4 are tested: next to a cut, high moments are not physical.
                  for (std::size_t i = 0; i < low; ++i)
                      if (!(std::abs(values[i]) <= 1.0 + 1e-6))
                          throw StiffnessError("moment hierarchy lost stability (|A| > 1); lower N, max_order or t_max",
                                               t);
                  std::copy(values.begin(), values.end(), state.values().begin());
                  observer(k, t, state);
              });
}

std::vector<MomentVector> evolve_exact(const Hierarchy& generator, const MomentVector& init, const TimeGrid& grid) {
    std::vector<MomentVector> out;
    evolve_exact(generator, init, grid, [&](std::size_t, double, const MomentVector& m) { out.push_back(m); });
    return out;
}

}  // namespace wqed::sym
