#ifndef SEXTIC_POLYDIV_HPP
#define SEXTIC_POLYDIV_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "sextic/form.hpp"
#include "sextic/matrix.hpp"

namespace sextic {

// Matrix of multiplication by A from degree-k forms into degree-(k+deg A)
// forms; column gamma is the coefficient vector of A * x^gamma.
template <class K>
Matrix<K> multiplication_matrix(const TernaryForm<K>& A, int k) {
    auto cols = exponents_of_degree(k);
    int out_rows = monomial_count(A.degree() + k);
    Matrix<K> m(out_rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [e, v] : A.coeffs())
            m(exponent_index(e + cols[j]), static_cast<int>(j)) = v;
    return m;
}

// Exact division B / A when it exists: solves the linear system Q * A = B.
template <class K>
std::optional<TernaryForm<K>> divide_form(const TernaryForm<K>& B,
                                          const TernaryForm<K>& A,
                                          double tol = 1e-9) {
    if (A.is_zero() || B.degree() < A.degree()) return std::nullopt;
    int k = B.degree() - A.degree();
    Matrix<K> m = multiplication_matrix(A, k);
    auto bvec = B.coefficient_vector();
    if constexpr (field_traits<K>::is_exact) {
        // Augmented RREF: solvable iff no pivot lands in the last column.
        Matrix<K> aug(m.rows(), m.cols() + 1);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
            aug(i, m.cols()) = bvec[i];
        }
        auto pivots = detail::rref(aug);
        std::vector<K> q(m.cols(), field_traits<K>::zero());
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == m.cols()) return std::nullopt;
            q[pivots[r]] = aug(static_cast<int>(r), m.cols());
        }
        auto check = m * q;
        for (int i = 0; i < m.rows(); ++i)
            if (check[i] != bvec[i]) return std::nullopt;
        return TernaryForm<K>::from_vector(k, q);
    } else {
        auto [x, residual] = solve_least_squares(m, bvec);
        if (residual > tol * (B.norm2() + 1e-300)) return std::nullopt;
        return TernaryForm<K>::from_vector(k, x);
    }
}

// Nonconstant common factor of two forms, if any, found by linear algebra:
// the kernel of (u,v) -> u*C1 - v*C2 on R_n x R_m has dimension
// dim R_g where g = deg gcd(C1,C2), and the v-components span (C1/gcd)*R_g.
template <class K>
std::optional<TernaryForm<K>> common_factor(const TernaryForm<K>& C1,
                                            const TernaryForm<K>& C2,
                                            double tol = 1e-9) {
    if (C1.is_zero() || C2.is_zero()) return std::nullopt;
    int m = C1.degree(), n = C2.degree();
    Matrix<K> m1 = multiplication_matrix(C1, n);
    Matrix<K> m2 = multiplication_matrix(C2, m);
    Matrix<K> stacked(m1.rows(), m1.cols() + m2.cols());
    for (int i = 0; i < m1.rows(); ++i) {
        for (int j = 0; j < m1.cols(); ++j) stacked(i, j) = m1(i, j);
        for (int j = 0; j < m2.cols(); ++j) stacked(i, m1.cols() + j) = -m2(i, j);
    }
    auto ker = kernel_basis(stacked, tol);
    size_t kdim = ker.size();
    // kdim = (g+1)(g+2)/2 for g = deg gcd
    int g = static_cast<int>(std::lround((std::sqrt(8.0 * kdim + 1.0) - 3.0) / 2.0));
    if (g <= 0) return std::nullopt;

    // Span V of the v-components, inside R_m.
    int vdim = monomial_count(m);
    Matrix<K> V(vdim, static_cast<int>(kdim));
    for (size_t c = 0; c < kdim; ++c)
        for (int i = 0; i < vdim; ++i) V(i, static_cast<int>(c)) = ker[c][m1.cols() + i];

    // A' = C1/gcd has degree m-g and satisfies A'*x^gamma in V for all
    // |gamma| = g; each condition is linear once V's orthogonal complement
    // is known (left kernel of V).
    auto vperp = kernel_basis(V.transposed(), tol);
    auto gammas = exponents_of_degree(g);
    int acols = monomial_count(m - g);
    Matrix<K> cond(static_cast<int>(vperp.size() * gammas.size()), acols);
    int row = 0;
    for (const auto& gamma : gammas) {
        TernaryForm<K> mono(g);
        mono.set(gamma, field_traits<K>::one());
        Matrix<K> mul = multiplication_matrix(mono, m - g); // (R_m) x (R_{m-g})
        for (const auto& w : vperp) {
            for (int j = 0; j < acols; ++j) {
                K s = field_traits<K>::zero();
                for (int i = 0; i < vdim; ++i) s = s + w[i] * mul(i, j);
                cond(row, j) = s;
            }
            ++row;
        }
    }
    auto aker = kernel_basis(cond, tol);
    if (aker.empty()) return std::nullopt;
    TernaryForm<K> cofactor = TernaryForm<K>::from_vector(m - g, aker.front());
    return divide_form(C1, cofactor, tol);
}

} // namespace sextic

#endif
