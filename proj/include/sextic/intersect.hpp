#ifndef SEXTIC_INTERSECT_HPP
#define SEXTIC_INTERSECT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sextic/form.hpp"
#include "sextic/matrix.hpp"
#include "sextic/pointset.hpp"
#include "sextic/polydiv.hpp"
#include "sextic/roots.hpp"

namespace sextic {

struct IntersectionPoint {
    PointC point;
    int multiplicity = 1;
};

namespace detail {

// Coefficients in x2 of F(a, 1, x2), index k multiplies x2^k.
inline std::vector<Complex> slice_x2(const FormC& F, Complex a) {
    std::vector<Complex> c(F.degree() + 1, Complex(0));
    for (const auto& [e, v] : F.coeffs()) {
        Complex t = v;
        for (int k = 0; k < e.e0; ++k) t *= a;
        c[e.e2] += t;
    }
    return c;
}

inline Complex resultant_sample(const FormC& P, const FormC& Q, Complex a) {
    auto p = slice_x2(P, a), q = slice_x2(Q, a);
    int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
    MatrixC s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(i, i + k) = p[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(n + i, i + k) = q[n - k];
    return determinant(s);
}

inline std::array<std::array<Complex, 3>, 3> random_projective_change(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<std::array<Complex, 3>, 3> m;
    for (auto& row : m)
        for (auto& x : row) x = Complex(g(rng), g(rng));
    return m;
}

// Newton iteration on (P(x0,1,x2), Q(x0,1,x2)).
struct PolishResult {
    Complex x0, x2;
    double residual = 1e30;
};

inline PolishResult polish(const FormC& P, const FormC& Q, const FormC& P0,
                           const FormC& P2, const FormC& Q0, const FormC& Q2,
                           Complex x0, Complex x2) {
    for (int it = 0; it < 60; ++it) {
        std::array<Complex, 3> p{x0, Complex(1), x2};
        Complex f1 = evaluate(P, p), f2 = evaluate(Q, p);
        Complex j00 = evaluate(P0, p), j01 = evaluate(P2, p);
        Complex j10 = evaluate(Q0, p), j11 = evaluate(Q2, p);
        Complex det = j00 * j11 - j01 * j10;
        if (std::abs(det) < 1e-300) break;
        Complex d0 = (f1 * j11 - f2 * j01) / det;
        Complex d2 = (f2 * j00 - f1 * j10) / det;
        x0 -= d0;
        x2 -= d2;
        double step = std::abs(d0) + std::abs(d2);
        if (step < 1e-16 * (1.0 + std::abs(x0) + std::abs(x2))) break;
    }
    std::array<Complex, 3> p{x0, Complex(1), x2};
    double norm = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
    std::array<Complex, 3> u{p[0] / norm, p[1] / norm, p[2] / norm};
    double r1 = std::abs(evaluate(P, u)), r2 = std::abs(evaluate(Q, u));
    return {x0, x2, std::max(r1, r2)};
}

} // namespace detail

// All deg(P)*deg(Q) intersection points of two coprime plane curves, with
// multiplicities counted by clustering at chordal distance 1e-6. The random
// coordinate change avoids solutions at infinity and coincident projections;
// runs are reproducible in the seed.
inline std::vector<IntersectionPoint>
intersect_curves(const FormC& P_in, const FormC& Q_in, std::uint64_t seed = 1) {
    FormC P = P_in * Complex(1.0 / P_in.norm2());
    FormC Q = Q_in * Complex(1.0 / Q_in.norm2());
    int m = P.degree(), n = Q.degree();
    int D = m * n;
    std::mt19937_64 rng(seed);
    double worst_stall = 1e300;

    for (int attempt = 0; attempt < 8; ++attempt) {
        auto g = detail::random_projective_change(rng);
        FormC Pg = compose(P, g), Qg = compose(Q, g);
        // leading coefficients in x2 must stay away from zero
        double leadP = std::abs(Pg.coefficient({0, 0, m}));
        double leadQ = std::abs(Qg.coefficient({0, 0, n}));
        if (leadP < 1e-3 * Pg.norm2() || leadQ < 1e-3 * Qg.norm2()) continue;

        // resultant in x0 by inverse DFT over D+1 roots of unity
        std::vector<Complex> res(D + 1);
        std::vector<Complex> samples(D + 1);
        for (int s = 0; s <= D; ++s) {
            double ang = 2.0 * M_PI * s / (D + 1);
            samples[s] = detail::resultant_sample(Pg, Qg, Complex(std::cos(ang), std::sin(ang)));
        }
        double maxc = 0;
        for (int k = 0; k <= D; ++k) {
            Complex c = 0;
            for (int s = 0; s <= D; ++s) {
                double ang = -2.0 * M_PI * k * s / (D + 1);
                c += samples[s] * Complex(std::cos(ang), std::sin(ang));
            }
            res[k] = c / Complex(D + 1);
            maxc = std::max(maxc, std::abs(res[k]));
        }
        if (maxc == 0.0 || std::abs(res[D]) < 1e-8 * maxc) continue;

        auto xs = aberth_roots(res, seed + 17 * attempt + 1);
        FormC P0 = partial(Pg, 0), P2 = partial(Pg, 2);
        FormC Q0 = partial(Qg, 0), Q2 = partial(Qg, 2);

        std::vector<PointC> pts;
        bool ok = true;
        for (const auto& a : xs) {
            // candidates are the x2 roots of the first cubic on the slice;
            // try them nearest to the second cubic's zero set first, and
            // refuse polishes that wander off to a different resultant root
            auto cands = aberth_roots(detail::slice_x2(Pg, a), seed + 99);
            std::sort(cands.begin(), cands.end(), [&](Complex u, Complex v) {
                std::array<Complex, 3> pu{a, Complex(1), u}, pv{a, Complex(1), v};
                return std::abs(evaluate(Qg, pu)) < std::abs(evaluate(Qg, pv));
            });
            detail::PolishResult best;
            for (const auto& x2 : cands) {
                auto r = detail::polish(Pg, Qg, P0, P2, Q0, Q2, a, x2);
                if (std::abs(r.x0 - a) > 0.1 * (1.0 + std::abs(a))) continue;
                if (r.residual < best.residual) best = r;
                if (best.residual < 1e-12) break;
            }
            if (best.residual > 1e-10) {
                worst_stall = std::min(worst_stall, best.residual);
                ok = false;
                break;
            }
            std::array<Complex, 3> y{best.x0, Complex(1), best.x2};
            std::array<Complex, 3> x;
            for (int i = 0; i < 3; ++i)
                x[i] = g[i][0] * y[0] + g[i][1] * y[1] + g[i][2] * y[2];
            pts.emplace_back(x);
        }
        if (!ok) continue;

        // midpoint of two projective points with phase alignment
        auto midpoint = [](const PointC& A, const PointC& B) {
            auto a = A.unit(), b = B.unit();
            Complex ip = 0;
            for (int i = 0; i < 3; ++i) ip += a[i] * std::conj(b[i]);
            Complex s = (std::abs(ip) > 0) ? ip / std::abs(ip) : Complex(1);
            std::array<Complex, 3> mid;
            for (int i = 0; i < 3; ++i) mid[i] = a[i] + s * b[i];
            return PointC(mid);
        };
        // merge when within the noise radius, or within the multiple-root
        // stall radius provided both curves also vanish at the midpoint
        // (coalescing points only polish to accuracy residual^(1/mult))
        auto should_merge = [&](const PointC& A, const PointC& B) {
            double d = chordal_distance(A, B);
            if (d < 1e-6) return true;
            if (d > 1e-3) return false;
            auto u = midpoint(A, B).unit();
            return std::abs(evaluate(P, u)) < 1e-10 &&
                   std::abs(evaluate(Q, u)) < 1e-10;
        };
        std::vector<IntersectionPoint> out;
        for (const auto& p : pts) {
            bool merged = false;
            for (auto& ip : out)
                if (should_merge(ip.point, p)) {
                    ip.multiplicity++;
                    merged = true;
                    break;
                }
            if (!merged) out.push_back({p, 1});
        }
        // agglomerate until stable
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i < out.size() && !changed; ++i)
                for (size_t j = i + 1; j < out.size() && !changed; ++j)
                    if (should_merge(out[i].point, out[j].point)) {
                        out[i].multiplicity += out[j].multiplicity;
                        out.erase(out.begin() + static_cast<long>(j));
                        changed = true;
                    }
        }
        return out;
    }
    throw IllConditioned("intersection polish failed after 8 coordinate changes, "
                         "best stalled residual " + std::to_string(worst_stall));
}

// The 9-point base locus of the pencil spanned by two coprime cubics.
inline std::vector<IntersectionPoint>
intersect_cubics(const FormC& C1, const FormC& C2, std::uint64_t seed = 1) {
    if (C1.degree() != 3 || C2.degree() != 3)
        throw WrongDegree("intersect_cubics expects two cubics");
    if (C1.is_zero() || C2.is_zero())
        throw WrongDegree("intersect_cubics expects nonzero cubics");
    if (common_factor(C1, C2))
        throw PositiveDimensional("cubics share a common factor");
    return intersect_curves(C1, C2, seed);
}

} // namespace sextic

#endif
