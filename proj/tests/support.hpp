#ifndef SEXTIC_TESTS_SUPPORT_HPP
#define SEXTIC_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <vector>

#include "sextic/engine.hpp"
#include "sextic/form.hpp"
#include "sextic/pointset.hpp"

namespace sextic::test {

// Rational point on the nodal cubic y^2 z = x^2 (x + z), parametrized by
// t -> (t^2 - 1, t (t^2 - 1), 1). On the smooth locus the parameter
// u = (t - 1)/(t + 1) turns the group law into multiplication: a curve of
// degree d cuts the cubic in 3d smooth points iff their u's multiply to 1.
// This produces exact rational complete intersections.
inline PointQ nodal_cubic_point(const Rational& t) {
    Rational x = t * t - 1;
    return PointQ({x, t * x, Rational(1)});
}

inline FormQ nodal_cubic() {
    FormQ c(3);
    c.set({0, 2, 1}, Rational(1));  // y^2 z
    c.set({3, 0, 0}, Rational(-1)); // -x^3
    c.set({2, 0, 1}, Rational(-1)); // -x^2 z
    return c;
}

inline Rational u_of_t(const Rational& t) { return (t - 1) / (t + 1); }
inline Rational t_of_u(const Rational& u) { return (1 + u) / (1 - u); }

// Distinct random rational parameters avoiding t = +-1 (the node and the
// point at infinity) and u = 0.
inline std::vector<Rational> random_parameters(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> ts;
    auto separated = [&](const Rational& t) {
        for (const auto& s : ts)
            if (abs(t - s) < Rational(1, 5)) return false;
        return true;
    };
    while (static_cast<int>(ts.size()) < n) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        if (t == 1 || t == -1 || t == 0) continue;
        if (!separated(t)) continue;
        ts.push_back(t);
    }
    return ts;
}

// 3d points cut on the nodal cubic by a degree-d curve: d*3 - 1 random
// parameters completed by the one that makes the u-product 1.
inline std::vector<Rational> curve_section_parameters(int d, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto ts = random_parameters(3 * d - 1, rng);
        Rational prod(1);
        for (const auto& t : ts) prod *= u_of_t(t);
        if (sgn(prod) == 0) continue;
        Rational u_last = 1 / prod;
        if (u_last == 1) continue; // t would be infinite
        Rational t_last = t_of_u(u_last);
        bool clash = (t_last == 1 || t_last == -1 || t_last == 0);
        for (const auto& t : ts)
            clash = clash || (abs(t - t_last) < Rational(1, 5));
        if (clash) continue;
        ts.push_back(t_last);
        return ts;
    }
    throw IllConditioned("could not sample curve section parameters");
}

inline PointSetQ points_from_parameters(const std::vector<Rational>& ts) {
    PointSetQ z;
    for (const auto& t : ts) z.points.push_back(nodal_cubic_point(t));
    return z;
}

// 9 rational points forming a complete intersection of two cubics.
inline PointSetQ ci33_points(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        PointSetQ z = points_from_parameters(curve_section_parameters(3, rng));
        if (ideal_component(z, 3).size() == 2) return z;
    }
    throw IllConditioned("CI(3,3) sampling failed");
}

// 18 rational points forming a complete intersection of a cubic and a sextic.
inline PointSetQ ci36_points(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        PointSetQ z = points_from_parameters(curve_section_parameters(6, rng));
        if (h_vector(z) == HVector{{1, 2, 3, 3, 3, 3, 2, 1}}) return z;
    }
    throw IllConditioned("CI(3,6) sampling failed");
}

// Random unimodular rational matrix: a product of elementary shears.
inline std::array<std::array<Rational, 3>, 3> random_unimodular(std::mt19937_64& rng) {
    std::array<std::array<Rational, 3>, 3> g{};
    for (int i = 0; i < 3; ++i) g[i][i] = 1;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int s = 0; s < 6; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int v = val(rng);
        if (v == 0) continue;
        // row op g <- E g with E = I + v e_ij keeps det = 1
        for (int k = 0; k < 3; ++k) g[i][k] += Rational(v) * g[j][k];
    }
    return g;
}

inline PointSetC random_complex_points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PointSetC z;
    while (static_cast<int>(z.size()) < n) {
        PointC p({Complex(gauss(rng), 0), Complex(gauss(rng), 0),
                  Complex(gauss(rng), 0)});
        if (!z.contains(p)) z.points.push_back(p);
    }
    return z;
}

inline PointSetQ random_rational_points(int n, std::uint64_t seed, int height = 10) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-height, height);
    PointSetQ z;
    while (static_cast<int>(z.size()) < n) {
        std::array<Rational, 3> c{Rational(coord(rng)), Rational(coord(rng)),
                                  Rational(coord(rng))};
        if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) continue;
        PointQ p(c);
        if (!z.contains(p)) z.points.push_back(p);
    }
    return z;
}

// True when some 4 points are collinear or some 7 lie on a conic: such a
// configuration forces a fixed component into every cubic through the set.
inline bool has_degenerate_subset(const PointSetQ& z) {
    int n = static_cast<int>(z.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    MatrixQ m(4, 3);
                    const int idx[4] = {a, b, c, d};
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 3; ++j)
                            m(i, j) = z.points[idx[i]].c[j];
                    if (rank(m) <= 2) return true;
                }
    if (n >= 7)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != 7) continue;
            PointSetQ sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.points.push_back(z.points[i]);
            if (!ideal_component(sub, 2).empty()) return true;
        }
    return false;
}

// Rational points resampled until no degenerate subset remains.
inline PointSetQ general_rational_points(int n, std::uint64_t seed,
                                         int height = 10) {
    for (int bump = 0; bump < 50; ++bump) {
        PointSetQ z = random_rational_points(n, seed + 100000ull * bump, height);
        if (!has_degenerate_subset(z)) return z;
    }
    throw IllConditioned("no nondegenerate configuration found");
}

// Random form supported on a given point set. Coefficients carry an exact
// power-of-two scaling that balances the norms of the summands; otherwise a
// large point's sixth power swamps the small ones beyond double precision
// and float verdicts about individual summands become meaningless.
inline FormQ combination_over(const PointSetQ& z, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 9);
    FormQ f(6);
    for (const auto& p : z.points) {
        double n = power_of_linear(p.c, 6).norm2();
        int e = static_cast<int>(std::lround(std::log2(n)));
        Rational scale = e >= 0 ? Rational(1, mpz_class(1) << e)
                                : Rational(mpz_class(1) << -e);
        int a = coeff(rng);
        f = f + power_of_linear(p.c, 6) * (Rational(rng() % 2 ? a : -a) * scale);
    }
    return f;
}

inline FormQ random_cubic(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (;;) {
        FormQ c(3);
        for (const auto& e : exponents_of_degree(3)) c.set(e, Rational(coeff(rng)));
        if (!c.is_zero()) return c;
    }
}

// Greedy matching distance between two point sets of equal size.
inline double matching_distance(const PointSetC& a, const PointSetC& b) {
    if (a.size() != b.size()) return 1e30;
    std::vector<bool> used(b.size(), false);
    double worst = 0;
    for (const auto& p : a.points) {
        double best = 1e30;
        int bi = -1;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = chordal_distance(p, b.points[j]);
            if (d < best) { best = d; bi = static_cast<int>(j); }
        }
        if (bi >= 0) used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace sextic::test

#endif
