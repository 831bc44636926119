#include "wqed/analytic/coefficients.hpp"

#include <functional>

#include "wqed/core/errors.hpp"

namespace wqed::analytic {

namespace {

void check_order(std::size_t n, std::size_t limit) {
    if (n > limit) throw DomainError("coefficient index beyond table size");
}

// Two-index recurrence x_ij = (x_{i,j-1}/j + x_{i-1,j}/i) / (i+j+shift).
template <class T>
void fill_triangle(std::vector<T>& out, std::size_t order, T seed, int shift,
                   const std::function<std::size_t(std::size_t, std::size_t)>& tri) {
    out.assign((order + 1) * (order + 2) / 2, T(0));
    out[tri(0, 0)] = seed;
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            const std::size_t j = n - i;
            T acc(0);
            if (j > 0) acc += out[tri(i, j - 1)] / T(static_cast<long>(j));
            if (i > 0) acc += out[tri(i - 1, j)] / T(static_cast<long>(i));
            out[tri(i, j)] = acc / T(static_cast<long>(n) + shift);
        }
    }
}

}  // namespace

std::size_t CoefficientTable::tri(std::size_t i, std::size_t j) const {
    const std::size_t n = i + j;
    return n * (n + 1) / 2 + i;
}

const CoefficientTable& CoefficientTable::get() {
    static const CoefficientTable table;
    return table;
}

CoefficientTable::CoefficientTable() {
    const auto index = [this](std::size_t i, std::size_t j) { return tri(i, j); };

    cn_q_.resize(kExactOrder + 1);
    cn_q_[0] = 1;
    for (std::size_t n = 0; n < kExactOrder; ++n) {
        const long k = static_cast<long>(n);
        mpq_class ratio(2 * (2 * k + 1), (k + 1) * (k + 1) * (k + 2));
        ratio.canonicalize();
        cn_q_[n + 1] = cn_q_[n] * ratio;
    }
    fill_triangle<mpq_class>(cij_q_, kExactOrder, mpq_class(1), 1, index);
    fill_triangle<mpq_class>(dij_q_, kExactOrder, mpq_class(-1), 0, index);
    // i + j = 0 has no (i+j) divisor; fill_triangle starts at n = 1.

    u_q_.assign(kExactOrder + 1, mpq_class(0));
    for (std::size_t n = 1; n <= kExactOrder; ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            const std::size_t j = n - 1 - i;
            acc += cij_q_[tri(i, j)] / mpq_class(static_cast<long>(j + 1));
        }
        u_q_[n] = 2 * acc;
    }

    // Double-precision extension, seeded from the exact values.
    cn_.resize(kMaxOrder + 1);
    for (std::size_t n = 0; n <= kMaxOrder; ++n) {
        if (n <= kExactOrder) {
            cn_[n] = cn_q_[n].get_d();
        } else {
            const double k = static_cast<double>(n - 1);
            cn_[n] = cn_[n - 1] * 2.0 * (2.0 * k + 1.0) / ((k + 1.0) * (k + 1.0) * (k + 2.0));
        }
    }
    fill_triangle<double>(cij_, kMaxOrder, 1.0, 1, index);
    fill_triangle<double>(dij_, kMaxOrder, -1.0, 0, index);
    for (std::size_t k = 0; k < cij_q_.size(); ++k) {
        cij_[k] = cij_q_[k].get_d();
        dij_[k] = dij_q_[k].get_d();
    }

    u_.assign(kMaxOrder + 1, 0.0);
    q_.assign(kMaxOrder + 1, 0.0);
    for (std::size_t n = 0; n <= kMaxOrder; ++n) {
        if (n >= 1) {
            if (n <= kExactOrder) {
                u_[n] = u_q_[n].get_d();
            } else {
                double acc = 0.0;
                for (std::size_t i = 0; i + 1 <= n; ++i) acc += cij_[tri(i, n - 1 - i)] / static_cast<double>(n - i);
                u_[n] = 2.0 * acc;
            }
        }
        double acc = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            acc -= dij_[tri(i, n - i)] / (static_cast<double>(i + 1) * static_cast<double>(n - i + 1));
        q_[n] = acc;
    }
}

const mpq_class& CoefficientTable::c_n_exact(std::size_t n) const {
    check_order(n, kExactOrder);
    return cn_q_[n];
}

const mpq_class& CoefficientTable::c_ij_exact(std::size_t i, std::size_t j) const {
    check_order(i + j, kExactOrder);
    return cij_q_[tri(i, j)];
}

const mpq_class& CoefficientTable::d_ij_exact(std::size_t i, std::size_t j) const {
    check_order(i + j, kExactOrder);
    return dij_q_[tri(i, j)];
}

const mpq_class& CoefficientTable::u_exact(std::size_t n) const {
    check_order(n, kExactOrder);
    return u_q_[n];
}

double CoefficientTable::c_n(std::size_t n) const {
    check_order(n, kMaxOrder);
    return cn_[n];
}

double CoefficientTable::c_ij(std::size_t i, std::size_t j) const {
    check_order(i + j, kMaxOrder);
    return cij_[tri(i, j)];
}

double CoefficientTable::d_ij(std::size_t i, std::size_t j) const {
    check_order(i + j, kMaxOrder);
    return dij_[tri(i, j)];
}

double CoefficientTable::u(std::size_t n) const {
    check_order(n, kMaxOrder);
    return u_[n];
}

double CoefficientTable::dicke_power_coefficient(std::size_t n) const {
    check_order(n, kMaxOrder);
    return q_[n];
}

mpq_class CoefficientTable::hypergeometric_coefficient(std::size_t n) {
    mpz_class four = 1;
    mpq_class half_rising = 1;
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class step(2 * static_cast<long>(k) + 1, 2);
        step.canonicalize();
        half_rising *= step;
    }
    mpz_class fact = 1;
    for (std::size_t k = 1; k <= n; ++k) fact *= static_cast<unsigned long>(k);
    mpz_pow_ui(four.get_mpz_t(), mpz_class(4).get_mpz_t(), n);
    mpq_class denominator_inv(mpz_class(1), fact * fact * fact * static_cast<unsigned long>(n + 1));
    denominator_inv.canonicalize();
    return half_rising * four * denominator_inv;
}

}  // namespace wqed::analytic
