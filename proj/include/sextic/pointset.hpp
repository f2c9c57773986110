#ifndef SEXTIC_POINTSET_HPP
#define SEXTIC_POINTSET_HPP

#include <array>
#include <cmath>
#include <vector>

#include "sextic/form.hpp"
#include "sextic/matrix.hpp"
#include "sextic/polydiv.hpp"

namespace sextic {

// Point of P^2 normalized so the last nonzero coordinate is 1. For the float
// field "nonzero" means above 1e-12 of the largest coordinate, and equality
// is chordal distance below 1e-8.
template <class K>
struct ProjectivePoint {
    std::array<K, 3> c{field_traits<K>::zero(), field_traits<K>::zero(),
                       field_traits<K>::zero()};

    ProjectivePoint() = default;
    explicit ProjectivePoint(const std::array<K, 3>& coords) : c(coords) {
        normalize();
    }

    void normalize() {
        int last = -1;
        if constexpr (field_traits<K>::is_exact) {
            for (int i = 2; i >= 0; --i)
                if (!field_traits<K>::is_zero(c[i])) { last = i; break; }
        } else {
            double maxabs = 0;
            for (int i = 0; i < 3; ++i)
                maxabs = std::max(maxabs, field_traits<K>::magnitude(c[i]));
            if (maxabs > 0)
                for (int i = 2; i >= 0; --i)
                    if (field_traits<K>::magnitude(c[i]) > 1e-12 * maxabs) {
                        last = i;
                        break;
                    }
        }
        if (last < 0) throw ZeroPoint("projective point has all coordinates zero");
        K inv = field_traits<K>::one() / c[last];
        for (int i = 0; i < 3; ++i) c[i] = c[i] * inv;
        for (int i = last; i < 3; ++i)
            c[i] = (i == last) ? field_traits<K>::one() : field_traits<K>::zero();
    }

    // Representative of unit 2-norm, derived deterministically from the
    // normalized coordinates.
    std::array<Complex, 3> unit() const {
        std::array<Complex, 3> u{to_complex(c[0]), to_complex(c[1]), to_complex(c[2])};
        double n = std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]));
        for (auto& x : u) x /= n;
        return u;
    }
};

// sin of the angle between the lines, computed as the norm of the component
// of one unit representative orthogonal to the other; the textbook
// sqrt(1 - |<a,b>|^2) loses half the mantissa near zero and cannot resolve
// distances below ~1e-8.
template <class K>
double chordal_distance(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
    auto a = p.unit(), b = q.unit();
    Complex ip = 0;
    for (int i = 0; i < 3; ++i) ip += a[i] * std::conj(b[i]);
    double s = 0;
    for (int i = 0; i < 3; ++i) s += std::norm(a[i] - ip * b[i]);
    return std::sqrt(s);
}

template <class K>
bool same_point(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
    if constexpr (field_traits<K>::is_exact)
        return p.c == q.c;
    else
        return chordal_distance(p, q) < 1e-8;
}

template <class K>
struct PointSet {
    std::vector<ProjectivePoint<K>> points;

    size_t size() const { return points.size(); }

    bool pairwise_distinct() const {
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (same_point(points[i], points[j])) return false;
        return true;
    }

    bool contains(const ProjectivePoint<K>& p) const {
        for (const auto& q : points)
            if (same_point(p, q)) return true;
        return false;
    }
};

using PointQ = ProjectivePoint<Rational>;
using PointC = ProjectivePoint<Complex>;
using PointSetQ = PointSet<Rational>;
using PointSetC = PointSet<Complex>;

inline PointC to_complex(const PointQ& p) {
    return PointC({to_complex(p.c[0]), to_complex(p.c[1]), to_complex(p.c[2])});
}
inline PointSetC to_complex(const PointSetQ& z) {
    PointSetC out;
    for (const auto& p : z.points) out.points.push_back(to_complex(p));
    return out;
}
inline const PointSetC& to_complex(const PointSetC& z) { return z; }

// Rows = points, columns = degree-d monomials. Over the float field the rows
// are evaluated at unit representatives and rescaled to unit norm; this
// changes neither the rank nor the kernel but keeps the entries comparable
// when point coordinates span many orders of magnitude.
template <class K>
Matrix<K> evaluation_matrix(const PointSet<K>& Z, int d) {
    auto exps = exponents_of_degree(d);
    Matrix<K> m(static_cast<int>(Z.size()), static_cast<int>(exps.size()));
    for (size_t i = 0; i < Z.size(); ++i) {
        if constexpr (field_traits<K>::is_exact) {
            for (size_t j = 0; j < exps.size(); ++j) {
                K v = field_traits<K>::one();
                for (int t = 0; t < 3; ++t)
                    for (int k = 0; k < exps[j][t]; ++k) v = v * Z.points[i].c[t];
                m(static_cast<int>(i), static_cast<int>(j)) = v;
            }
        } else {
            auto u = Z.points[i].unit();
            double rownorm2 = 0;
            std::vector<Complex> row(exps.size());
            for (size_t j = 0; j < exps.size(); ++j) {
                Complex v(1);
                for (int t = 0; t < 3; ++t)
                    for (int k = 0; k < exps[j][t]; ++k) v *= u[t];
                row[j] = v;
                rownorm2 += std::norm(v);
            }
            double scale = 1.0 / std::sqrt(rownorm2);
            for (size_t j = 0; j < exps.size(); ++j)
                m(static_cast<int>(i), static_cast<int>(j)) = row[j] * scale;
        }
    }
    return m;
}

template <class K>
int hilbert_function(const PointSet<K>& Z, int d, double tol = 1e-9) {
    if (d < 0) return 0;
    return rank(evaluation_matrix(Z, d), tol);
}

struct HVector {
    std::vector<int> values;
    bool operator==(const HVector&) const = default;
};

template <class K>
HVector h_vector(const PointSet<K>& Z, double tol = 1e-9) {
    HVector h;
    int prev = 0;
    for (int d = 0;; ++d) {
        int cur = hilbert_function(Z, d, tol);
        int diff = cur - prev;
        if (diff == 0) break;
        h.values.push_back(diff);
        prev = cur;
        if (cur == static_cast<int>(Z.size())) break;
    }
    return h;
}

// Basis of degree-d forms vanishing on Z.
template <class K>
std::vector<TernaryForm<K>> ideal_component(const PointSet<K>& Z, int d,
                                            double tol = 1e-9) {
    auto ker = kernel_basis(evaluation_matrix(Z, d), tol);
    std::vector<TernaryForm<K>> out;
    for (const auto& v : ker) out.push_back(TernaryForm<K>::from_vector(d, v));
    return out;
}

// Z is the complete intersection of two cubics: |Z| = 9, exactly two
// independent cubics through Z, coprime, and h-vector (1,2,3,2,1).
template <class K>
bool is_complete_intersection_33(const PointSet<K>& Z, double tol = 1e-9) {
    if (Z.size() != 9) throw WrongCardinality("expected 9 points");
    auto cubics = ideal_component(Z, 3, tol);
    if (cubics.size() != 2) return false;
    if (common_factor(cubics[0], cubics[1], tol)) return false;
    return h_vector(Z, tol) == HVector{{1, 2, 3, 2, 1}};
}

// Least squares solve of [v_d(L_1) ... v_d(L_r)] a = coeffs(F).
template <class K>
std::pair<std::vector<Complex>, double> span_membership(const TernaryForm<K>& F,
                                                        const PointSet<K>& Z) {
    int d = F.degree();
    auto Zc = to_complex(Z);
    // columns are scaled to unit norm before solving: representative choices
    // make raw column norms differ by many orders of magnitude, which would
    // defeat the rank-revealing factorization
    MatrixC m(monomial_count(d), static_cast<int>(Z.size()));
    std::vector<double> colnorm(Z.size(), 1.0);
    for (size_t j = 0; j < Zc.size(); ++j) {
        auto f = power_of_linear(Zc.points[j].c, d);
        colnorm[j] = f.norm2();
        auto col = f.coefficient_vector();
        for (size_t i = 0; i < col.size(); ++i)
            m(static_cast<int>(i), static_cast<int>(j)) =
                col[i] / colnorm[j];
    }
    auto [x, residual] = solve_least_squares(m, to_complex(F).coefficient_vector());
    for (size_t j = 0; j < x.size(); ++j) x[j] /= colnorm[j];
    return {x, residual};
}

template <class K>
struct WaringExpression {
    PointSet<K> points;
    std::vector<K> coefficients;
    int degree = 6;

    TernaryForm<K> reconstruct() const {
        TernaryForm<K> f(degree);
        for (size_t i = 0; i < points.size(); ++i)
            f = f + power_of_linear(points.points[i].c, degree) * coefficients[i];
        return f;
    }
};

using ExpressionQ = WaringExpression<Rational>;
using ExpressionC = WaringExpression<Complex>;

inline ExpressionC to_complex(const ExpressionQ& e) {
    ExpressionC out;
    out.points = to_complex(e.points);
    for (const auto& c : e.coefficients) out.coefficients.push_back(to_complex(c));
    out.degree = e.degree;
    return out;
}
inline const ExpressionC& to_complex(const ExpressionC& e) { return e; }

} // namespace sextic

#endif
