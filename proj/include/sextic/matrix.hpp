#ifndef SEXTIC_MATRIX_HPP
#define SEXTIC_MATRIX_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sextic/errors.hpp"
#include "sextic/scalar.hpp"

namespace sextic {

// Dense row-major matrix over one scalar field. Exact routines (Bareiss
// elimination, rational RREF) serve the Rational field; the Complex field is
// backed by Eigen decompositions with a relative singular-value threshold.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * cols, field_traits<K>::zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const K& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = field_traits<K>::one();
        return m;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DegreeMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (field_traits<K>::is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }

    std::vector<K> operator*(const std::vector<K>& v) const {
        std::vector<K> r(rows_, field_traits<K>::zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

private:
    int rows_, cols_;
    std::vector<K> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixC = Matrix<Complex>;

inline MatrixC to_complex(const MatrixQ& m) {
    MatrixC r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
    return r;
}
inline const MatrixC& to_complex(const MatrixC& m) { return m; }

namespace detail {

using EMatC = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

inline EMatC to_eigen(const MatrixC& m) {
    EMatC e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

// Clear denominators row by row; rank and kernel are unchanged, the
// determinant picks up the product of the scalings.
struct IntegerRows {
    std::vector<std::vector<mpz_class>> m;
    Rational scale; // product of the per-row multipliers
};

inline IntegerRows integer_rows(const MatrixQ& a) {
    IntegerRows out;
    out.scale = 1;
    out.m.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < a.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    a(i, j).get_den().get_mpz_t());
        out.m[i].resize(a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            Rational v = a(i, j) * Rational(lcm);
            out.m[i][j] = v.get_num();
        }
        out.scale *= Rational(lcm);
    }
    return out;
}

// Fraction-free (Bareiss) elimination. Returns rank; if det != nullptr and
// the matrix is square, stores the determinant of the integer matrix.
inline int bareiss(std::vector<std::vector<mpz_class>>& m, mpz_class* det) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    mpz_class prev = 1;
    int r = 0, sign = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) { std::swap(m[pr], m[r]); sign = -sign; }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    if (det) {
        if (rows != cols || r < rows)
            *det = 0;
        else
            *det = sign * prev;
    }
    return r;
}

// Reduced row echelon form over the rationals, pivots chosen left to right.
// Returns pivot columns.
inline std::vector<int> rref(MatrixQ& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (sgn(a(i, c)) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

template <class K>
int rank(const Matrix<K>& m, double tol = 1e-9) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (field_traits<K>::is_exact) {
        auto ir = detail::integer_rows(m);
        return detail::bareiss(ir.m, nullptr);
    } else {
        Eigen::JacobiSVD<detail::EMatC> svd(detail::to_eigen(m));
        const auto& sv = svd.singularValues();
        if (sv.size() == 0) return 0;
        double thresh = tol * sv(0);
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++r;
        return r;
    }
}

inline std::vector<double> singular_values(const MatrixC& m) {
    Eigen::JacobiSVD<detail::EMatC> svd(detail::to_eigen(m));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

// Basis of the right null space. Exact field: deterministic RREF basis with
// free variables in global column order. Float field: trailing right singular
// vectors.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m, double tol = 1e-9) {
    std::vector<std::vector<K>> out;
    if constexpr (field_traits<K>::is_exact) {
        MatrixQ a = m;
        auto pivots = detail::rref(a);
        std::vector<bool> is_pivot(m.cols(), false);
        for (int c : pivots) is_pivot[c] = true;
        for (int c = 0; c < m.cols(); ++c) {
            if (is_pivot[c]) continue;
            std::vector<Rational> v(m.cols(), Rational(0));
            v[c] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), c);
            out.push_back(std::move(v));
        }
    } else {
        Eigen::JacobiSVD<detail::EMatC> svd(detail::to_eigen(m),
                                            Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double smax = sv.size() ? sv(0) : 0.0;
        for (int i = 0; i < m.cols(); ++i) {
            double s = i < sv.size() ? sv(i) : 0.0;
            if (s > tol * smax) continue;
            std::vector<Complex> v(m.cols());
            for (int j = 0; j < m.cols(); ++j) v[j] = svd.matrixV()(j, i);
            out.push_back(std::move(v));
        }
    }
    return out;
}

template <class K>
K determinant(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
    if (m.rows() == 0) return field_traits<K>::one();
    if constexpr (field_traits<K>::is_exact) {
        auto ir = detail::integer_rows(m);
        mpz_class d;
        detail::bareiss(ir.m, &d);
        return Rational(d) / ir.scale;
    } else {
        return detail::to_eigen(m).partialPivLu().determinant();
    }
}

// Least squares minimizer of |Mx - b| via column-pivoted QR (float field).
inline std::pair<std::vector<Complex>, double>
solve_least_squares(const MatrixC& m, const std::vector<Complex>& b) {
    detail::EMatC a = detail::to_eigen(m);
    Eigen::VectorXcd bv(b.size());
    for (size_t i = 0; i < b.size(); ++i) bv(static_cast<int>(i)) = b[i];
    Eigen::VectorXcd x = a.colPivHouseholderQr().solve(bv);
    double residual = (a * x - bv).norm();
    return {std::vector<Complex>(x.data(), x.data() + x.size()), residual};
}

} // namespace sextic

#endif
