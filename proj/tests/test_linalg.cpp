#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/catalecticant.hpp"
#include "sextic/matrix.hpp"
#include "sextic/pointset.hpp"

using namespace sextic;

namespace {

MatrixQ random_matrix(int r, int c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    MatrixQ m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Rational v(num(rng), den(rng));
            v.canonicalize(); // mpq arithmetic requires canonical operands
            m(i, j) = v;
        }
    return m;
}

MatrixQ transpose(const MatrixQ& m) {
    MatrixQ t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

MatrixQ product(const MatrixQ& a, const MatrixQ& b) {
    MatrixQ p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rational s(0);
            for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            p(i, j) = s;
        }
    return p;
}

} // namespace

TEST_CASE("rank worked examples") {
    MatrixQ id(10, 10);
    for (int i = 0; i < 10; ++i) id(i, i) = 1;
    CHECK(rank(id) == 10);

    MatrixQ zero(5, 7);
    CHECK(rank(zero) == 0);

    FormQ f(6); // x0^6 + x1^6
    f.set({6, 0, 0}, Rational(1));
    f.set({0, 6, 0}, Rational(1));
    CHECK(rank(catalecticant(f, 3).matrix) == 2);
}

TEST_CASE("kernel_basis worked examples") {
    MatrixQ id(4, 4);
    for (int i = 0; i < 4; ++i) id(i, i) = 1;
    CHECK(kernel_basis(id).empty());

    MatrixQ row(1, 3);
    row(0, 0) = row(0, 1) = row(0, 2) = 1;
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(v[0] + v[1] + v[2] == 0);

    FormQ sq(6); // (x0 x1 x2)^2: kernel cubics are the pure cubes
    sq.set({2, 2, 2}, Rational(1));
    auto cub = kernel_basis(catalecticant(sq, 3).matrix);
    REQUIRE(cub.size() == 3);
    auto exps = exponents_of_degree(3);
    for (const auto& v : cub) {
        int support = 0;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                ++support;
                CHECK((exps[i] == Exponent{3, 0, 0} || exps[i] == Exponent{0, 3, 0} ||
                       exps[i] == Exponent{0, 0, 3}));
            }
        CHECK(support == 1);
    }
}

TEST_CASE("determinant worked examples") {
    MatrixQ id(6, 6);
    for (int i = 0; i < 6; ++i) id(i, i) = 1;
    CHECK(determinant(id) == 1);

    MatrixQ d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 3;
    d(2, 2) = 5;
    CHECK(determinant(d) == 30);

    // sum of 9 sixth powers: the middle catalecticant is singular exactly
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> val(-6, 6);
    FormQ f(6);
    for (int i = 0; i < 9; ++i) {
        std::array<Rational, 3> p{Rational(val(rng)), Rational(val(rng)),
                                  Rational(val(rng))};
        if (p[0] == 0 && p[1] == 0 && p[2] == 0) p[2] = 1;
        f = f + power_of_linear(p, 6);
    }
    CHECK(determinant(catalecticant(f, 3).matrix) == 0);

    MatrixQ rect(2, 3);
    CHECK_THROWS_AS(determinant(rect), NotSquare);
}

TEST_CASE("least squares examples") {
    MatrixC id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = Complex(1);
    std::vector<Complex> b{Complex(1, 2), Complex(-3), Complex(0, 5)};
    auto [x, res] = solve_least_squares(id, b);
    CHECK(res < 1e-14);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - b[i]) < 1e-14);

    // overdetermined but consistent
    MatrixC m(4, 2);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 0) = 1;
    m(2, 1) = 1;
    m(3, 0) = 2;
    m(3, 1) = -1;
    std::vector<Complex> rhs{Complex(3), Complex(4), Complex(7), Complex(2)};
    auto [y, res2] = solve_least_squares(m, rhs);
    CHECK(res2 < 1e-12);
    CHECK(std::abs(y[0] - Complex(3)) < 1e-12);
    CHECK(std::abs(y[1] - Complex(4)) < 1e-12);

    // 28x9 sixth-power column system with a known combination
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    MatrixC v(28, 9);
    std::vector<Complex> target(28, Complex(0));
    for (int j = 0; j < 9; ++j) {
        std::array<Complex, 3> p{Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
                                 Complex(g(rng), g(rng))};
        auto col = power_of_linear(p, 6).coefficient_vector();
        Complex a(g(rng), g(rng));
        for (int i = 0; i < 28; ++i) {
            v(i, j) = col[i];
            target[i] += a * col[i];
        }
    }
    auto [z, res3] = solve_least_squares(v, target);
    CHECK(res3 < 1e-9);
}

TEST_CASE("rank is invariant under transpose") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        MatrixQ m = random_matrix(5, 8, rng);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 5; ++t) {
        MatrixQ a = random_matrix(6, 6, rng), b = random_matrix(6, 6, rng);
        CHECK(determinant(product(a, b)) == determinant(a) * determinant(b));
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937_64 rng(23);
    MatrixQ m = random_matrix(4, 9, rng);
    auto ker = kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) == 9 - rank(m));
    for (const auto& v : ker)
        for (int i = 0; i < m.rows(); ++i) {
            Rational s(0);
            for (int j = 0; j < 9; ++j) s += m(i, j) * v[j];
            CHECK(s == 0);
        }

    // float kernel: residual below tolerance times the matrix scale
    MatrixC mc = to_complex(m);
    auto kerc = kernel_basis(mc, 1e-9);
    CHECK(kerc.size() == ker.size());
    double scale = 0;
    for (int i = 0; i < mc.rows(); ++i)
        for (int j = 0; j < mc.cols(); ++j) scale = std::max(scale, std::abs(mc(i, j)));
    for (const auto& v : kerc)
        for (int i = 0; i < mc.rows(); ++i) {
            Complex s(0);
            for (int j = 0; j < 9; ++j) s += mc(i, j) * v[j];
            CHECK(std::abs(s) < 1e-9 * scale * 9);
        }
}
