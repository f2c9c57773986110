#ifndef SEXTIC_FLATTENING_HPP
#define SEXTIC_FLATTENING_HPP

#include <array>
#include <vector>

#include "sextic/catalecticant.hpp"
#include "sextic/form.hpp"
#include "sextic/matrix.hpp"

namespace sextic {

// The fixed 6x6 symmetric matrix of dual quadratic forms describing
// Sym^2 of the map v -> v ^ x; rows and columns follow the global order of
// the degree-2 monomial basis z0^2, z0z1, z0z2, z1^2, z1z2, z2^2.
template <class K>
const std::array<std::array<TernaryForm<K>, 6>, 6>& b_matrix() {
    static const auto B = [] {
        // integer coefficient of each degree-2 dual monomial, flattened as
        // entry[row][col][monomial index]
        static const int table[6][6][6] = {
            // z0^2 z0z1 z0z2 z1^2 z1z2 z2^2
            {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
             {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -2, 0}, {0, 0, 0, 1, 0, 0}},
            {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -2}, {0, 0, 0, 0, 2, 0},
             {0, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0}, {0, -2, 0, 0, 0, 0}},
            {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 0}, {0, 0, 0, -2, 0, 0},
             {0, 0, -2, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
            {{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, -2, 0, 0, 0},
             {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}},
            {{0, 0, 0, 0, -2, 0}, {0, 0, 2, 0, 0, 0}, {0, 2, 0, 0, 0, 0},
             {0, 0, 0, 0, 0, 0}, {-2, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
            {{0, 0, 0, 1, 0, 0}, {0, -2, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
             {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}};
        std::array<std::array<TernaryForm<K>, 6>, 6> b;
        auto exps = exponents_of_degree(2);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                TernaryForm<K> f(2);
                for (int t = 0; t < 6; ++t)
                    if (table[i][j][t] != 0) f.set(exps[t], K(table[i][j][t]));
                b[i][j] = f;
            }
        return b;
    }();
    return B;
}

// 36x36 flattening of a sextic: block (i,j) is the order-2 catalecticant of
// the quartic obtained by applying B_ij to F. Row index is i*6+a with a a
// degree-2 exponent index, and likewise for columns.
template <class K>
Matrix<K> build_Pf(const TernaryForm<K>& F) {
    if (F.degree() != 6) throw WrongDegree("flattening needs a sextic");
    const auto& B = b_matrix<K>();
    Matrix<K> P(36, 36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (B[i][j].is_zero()) continue;
            auto block = catalecticant(apply_operator(B[i][j], F), 2).matrix;
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b)
                    P(i * 6 + a, j * 6 + b) = block(a, b);
        }
    return P;
}

// 36-vector of the endomorphism of Sym^2 C^3 induced as a derivation by the
// elementary matrix x_r d/dx_s, in the flattening's index convention.
inline std::vector<Rational> derivation_vector(int r, int s) {
    std::vector<Rational> v(36, Rational(0));
    auto exps = exponents_of_degree(2);
    for (int q = 0; q < 6; ++q) {
        Exponent e = exps[q];
        int es = e[s];
        if (es == 0) continue;
        Exponent out = e;
        (s == 0 ? out.e0 : s == 1 ? out.e1 : out.e2) -= 1;
        (r == 0 ? out.e0 : r == 1 ? out.e1 : out.e2) += 1;
        int p = exponent_index(out);
        // X[p][q] = es; flattened with the B-slot index first
        v[q * 6 + p] = Rational(es);
    }
    return v;
}

// 36x9 matrix whose columns are the nine derivation vectors.
inline const MatrixQ& derivation_matrix() {
    static const MatrixQ D = [] {
        MatrixQ d(36, 9);
        int col = 0;
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s, ++col) {
                auto v = derivation_vector(r, s);
                for (int i = 0; i < 36; ++i) d(i, col) = v[i];
            }
        return d;
    }();
    return D;
}

// Rational basis of the 27-dimensional orthogonal complement (standard inner
// product on 36-vectors) of the derivation image of End(C^3); computed once.
inline const MatrixQ& complement_basis() {
    static const MatrixQ Q = [] {
        auto ker = kernel_basis(derivation_matrix().transposed());
        MatrixQ q(36, static_cast<int>(ker.size()));
        for (size_t c = 0; c < ker.size(); ++c)
            for (int i = 0; i < 36; ++i) q(i, static_cast<int>(c)) = ker[c][i];
        return q;
    }();
    return Q;
}

template <class K>
Matrix<K> complement_basis_as() {
    if constexpr (field_traits<K>::is_exact)
        return complement_basis();
    else
        return to_complex(complement_basis());
}

// 27x27 restriction A_f = Q^T P_f Q.
template <class K>
Matrix<K> build_Af(const TernaryForm<K>& F) {
    Matrix<K> Q = complement_basis_as<K>();
    return Q.transposed() * build_Pf(F) * Q;
}

// det A_f, the degree-27 invariant (fixed up to the nonzero constant induced
// by the choice of complement basis).
template <class K>
K H27(const TernaryForm<K>& F) {
    return determinant(build_Af(F));
}

// Scale-free vanishing test: relative smallest singular value of A_f at the
// unit-normalized form.
inline double h27_relative_gap(const FormC& F) {
    double n = F.norm2();
    if (n == 0.0) return 0.0;
    auto sv = singular_values(build_Af(F * Complex(1.0 / n)));
    if (sv.empty() || sv.front() == 0.0) return 0.0;
    return sv.back() / sv.front();
}

inline bool h27_vanishes(const FormC& F, double tol = 1e-9) {
    return h27_relative_gap(F) <= tol;
}

} // namespace sextic

#endif
