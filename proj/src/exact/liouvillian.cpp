#include "wqed/exact/liouvillian.hpp"

#include <bit>
#include <cmath>

#include "wqed/core/errors.hpp"

namespace wqed::exact {

Couplings Couplings::from_config(const SystemConfig& config) {
    std::vector<double> fwd(config.n_atoms(), config.beta_forward());
    std::vector<double> bwd(config.n_atoms(), config.beta_backward());
    return from_betas(fwd, bwd);
}

Couplings Couplings::from_betas(std::span<const double> beta_forward, std::span<const double> beta_backward) {
    if (beta_forward.size() != beta_backward.size()) throw DomainError("coupling lists differ in length");
    Couplings c;
    for (std::size_t i = 0; i < beta_forward.size(); ++i) {
        if (beta_forward[i] < 0.0 || beta_backward[i] < 0.0) throw DomainError("couplings must be non-negative");
        if (beta_forward[i] + beta_backward[i] > 1.0) throw DomainError("waveguide branching exceeds unity");
        c.right.emplace_back(std::sqrt(beta_forward[i]), 0.0);
        c.left.emplace_back(std::sqrt(beta_backward[i]), 0.0);
    }
    return c;
}

Liouvillian::Liouvillian(Couplings couplings, Matrix matrix)
    : couplings_(std::move(couplings)), matrix_(std::move(matrix)) {}

void Liouvillian::apply(std::span<const complex> in, std::span<complex> out) const {
    const auto n = static_cast<Eigen::Index>(in.size());
    Eigen::Map<const Eigen::VectorXcd> x(in.data(), n);
    Eigen::Map<Eigen::VectorXcd> y(out.data(), n);
    y.noalias() = matrix_ * x;
}

DensityMatrix Liouvillian::apply(const DensityMatrix& rho) const {
    DensityMatrix out(rho.n_atoms());
    apply(rho.data(), out.data());
    return out;
}

double Liouvillian::trace_preservation_defect() const {
    const std::size_t d = dim();
    std::vector<complex> column_trace(d * d, 0.0);
    for (std::size_t s = 0; s < d; ++s) {
        const auto row = static_cast<Eigen::Index>(s * d + s);
        for (Matrix::InnerIterator it(matrix_, row); it; ++it) column_trace[it.col()] += it.value();
    }
    double worst = 0.0;
    for (const auto& v : column_trace) worst = std::max(worst, std::abs(v));
    return worst;
}

Liouvillian build_liouvillian(const SystemConfig& config) {
    if (config.n_atoms() > kMaxAtoms) throw CapacityError("exact solver is capped at 8 atoms");
    return build_liouvillian(Couplings::from_config(config));
}

Liouvillian build_liouvillian(const Couplings& couplings) {
    const std::size_t n = couplings.n_atoms();
    if (n == 0) throw DomainError("need at least one atom");
    if (n > kMaxAtoms) throw CapacityError("exact solver is capped at 8 atoms");
    const std::size_t dim = std::size_t{1} << n;
    auto bit = [n](std::size_t atom) { return std::size_t{1} << (n - 1 - atom); };
    const auto& r = couplings.right;
    const auto& l = couplings.left;

    // K = 1/2 sum_n s+_n s-_n + sum_{i<n} r_n^* r_i s+_n s-_i + sum_{i>n} l_n^* l_i s+_n s-_i
    // so that d rho/dt = -K rho - rho K^dagger + sum_{a,b} J_ab s-_a rho s+_b,
    // J_aa = 1 and J_ab = r_a r_b^* + l_a l_b^* for a != b.
    std::vector<complex> hop(n * n, 0.0);  // hop[n_idx * n + i] : coefficient of s+_n s-_i
    std::vector<complex> jump(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                jump[a * n + b] = 1.0;
                continue;
            }
            hop[a * n + b] = b < a ? std::conj(r[a]) * r[b] : std::conj(l[a]) * l[b];
            jump[a * n + b] = r[a] * std::conj(r[b]) + l[a] * std::conj(l[b]);
        }
    }

    // K |s> as a list of (target, coefficient)
    std::vector<std::vector<std::pair<std::size_t, complex>>> k_action(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        auto& out = k_action[s];
        const double excited = static_cast<double>(std::popcount(s));
        if (excited > 0.0) out.emplace_back(s, 0.5 * excited);
        for (std::size_t up = 0; up < n; ++up) {
            if (s & bit(up)) continue;
            for (std::size_t down = 0; down < n; ++down) {
                if (!(s & bit(down)) || hop[up * n + down] == 0.0) continue;
                out.emplace_back((s ^ bit(down)) | bit(up), hop[up * n + down]);
            }
        }
    }

    std::vector<Eigen::Triplet<complex>> triplets;
    triplets.reserve(dim * dim * (n * n / 2 + 4));
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t d = 0; d < dim; ++d) {
            const auto col = static_cast<int>(c * dim + d);
            for (const auto& [a, k] : k_action[c]) triplets.emplace_back(static_cast<int>(a * dim + d), col, -k);
            for (const auto& [b, k] : k_action[d])
                triplets.emplace_back(static_cast<int>(c * dim + b), col, -std::conj(k));
            for (std::size_t a = 0; a < n; ++a) {
                if (!(c & bit(a))) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (!(d & bit(b)) || jump[a * n + b] == 0.0) continue;
                    triplets.emplace_back(static_cast<int>((c ^ bit(a)) * dim + (d ^ bit(b))), col, jump[a * n + b]);
                }
            }
        }
    }
    Liouvillian::Matrix m(static_cast<Eigen::Index>(dim * dim), static_cast<Eigen::Index>(dim * dim));
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    return Liouvillian(couplings, std::move(m));
}

}  // namespace wqed::exact
