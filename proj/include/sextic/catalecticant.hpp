#ifndef SEXTIC_CATALECTICANT_HPP
#define SEXTIC_CATALECTICANT_HPP

#include <vector>

#include "sextic/form.hpp"
#include "sextic/matrix.hpp"

namespace sextic {

// Matrix of the apolarity pairing of a degree-d form F in order k: rows are
// indexed by degree-(d-k) dual exponents b, columns by degree-k dual
// exponents a, and entry (b,a) is the scalar d^{a+b} F = (a+b)! F_{a+b}.
// The right kernel is the degree-k slice of the apolar ideal; the matrix is
// symmetric when 2k = d (the 10x10 case k=3, d=6).
template <class K>
struct CatalecticantMatrix {
    int k = 0;
    int degree = 0;
    Matrix<K> matrix;
};

template <class K>
CatalecticantMatrix<K> catalecticant(const TernaryForm<K>& F, int k) {
    if (k < 0 || k > F.degree())
        throw DegreeMismatch("catalecticant order out of range");
    auto rows = exponents_of_degree(F.degree() - k);
    auto cols = exponents_of_degree(k);
    CatalecticantMatrix<K> cat;
    cat.k = k;
    cat.degree = F.degree();
    cat.matrix = Matrix<K>(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            Exponent e = rows[i] + cols[j];
            K c = F.coefficient(e);
            if (!field_traits<K>::is_zero(c))
                cat.matrix(static_cast<int>(i), static_cast<int>(j)) =
                    c * K(exponent_factorial(e));
        }
    return cat;
}

// Basis of F^perp in degree k, as dual-variable forms.
template <class K>
std::vector<TernaryForm<K>> apolar_component(const TernaryForm<K>& F, int k,
                                             double tol = 1e-9) {
    auto cat = catalecticant(F, k);
    std::vector<TernaryForm<K>> out;
    for (const auto& v : kernel_basis(cat.matrix, tol))
        out.push_back(TernaryForm<K>::from_vector(k, v));
    return out;
}

// Projective dimension of the k-polar space; -1 for the zero form.
template <class K>
int polar_dim(const TernaryForm<K>& F, int k, double tol = 1e-9) {
    return rank(catalecticant(F, k).matrix, tol) - 1;
}

} // namespace sextic

#endif
