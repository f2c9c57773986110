#ifndef SEXTIC_TERRACINI_HPP
#define SEXTIC_TERRACINI_HPP

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "sextic/errors.hpp"
#include "sextic/flattening.hpp"
#include "sextic/form.hpp"
#include "sextic/matrix.hpp"
#include "sextic/pointset.hpp"

namespace sextic {

namespace detail {

inline std::vector<Complex> monomial_row(const std::array<Complex, 3>& p, int d) {
    auto exps = exponents_of_degree(d);
    std::vector<Complex> row(exps.size());
    for (size_t j = 0; j < exps.size(); ++j) {
        Complex v = 1;
        for (int t = 0; t < 3; ++t)
            for (int k = 0; k < exps[j][t]; ++k) v *= p[t];
        row[j] = v;
    }
    return row;
}

// d/dx_t of each degree-d monomial at p, as a row.
inline std::vector<Complex> monomial_jacobian_row(const std::array<Complex, 3>& p,
                                                  int d, int t) {
    auto exps = exponents_of_degree(d);
    std::vector<Complex> row(exps.size());
    for (size_t j = 0; j < exps.size(); ++j) {
        int et = exps[j][t];
        if (et == 0) { row[j] = 0; continue; }
        Complex v = static_cast<double>(et);
        for (int u = 0; u < 3; ++u) {
            int e = exps[j][u] - (u == t ? 1 : 0);
            for (int k = 0; k < e; ++k) v *= p[u];
        }
        row[j] = v;
    }
    return row;
}

inline std::array<Complex, 3> random_real_point(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {Complex(g(rng), 0), Complex(g(rng), 0), Complex(g(rng), 0)};
}

} // namespace detail

// det of the 10x10 matrix of cubic monomials at ten points (unit
// representatives); nonzero iff no cubic passes through all ten.
inline Complex cubic_det(const std::vector<PointC>& pts) {
    if (pts.size() != 10) throw WrongCardinality("cubic_det expects 10 points");
    MatrixC m(10, 10);
    for (int i = 0; i < 10; ++i) {
        auto row = detail::monomial_row(pts[i].unit(), 3);
        for (int j = 0; j < 10; ++j) m(i, j) = row[j];
    }
    return determinant(m);
}

// 27x28 matrix of the stacked Jacobians of the degree-6 Veronese at nine
// points (unit representatives). Its row space is the span of the tangent
// spaces at the nine sixth powers.
inline MatrixC terracini_matrix(const PointSetC& nine) {
    if (nine.size() != 9) throw WrongCardinality("terracini_matrix expects 9 points");
    MatrixC m(27, 28);
    for (int i = 0; i < 9; ++i) {
        auto u = nine.points[i].unit();
        for (int t = 0; t < 3; ++t) {
            auto row = detail::monomial_jacobian_row(u, 6, t);
            for (int j = 0; j < 28; ++j) m(3 * i + t, j) = row[j];
        }
    }
    return m;
}

// det of the Terracini matrix completed by the Veronese row of a tenth point.
inline Complex R_det(const PointSetC& nine, const PointC& p10) {
    MatrixC t = terracini_matrix(nine);
    MatrixC m(28, 28);
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 28; ++j) m(i, j) = t(i, j);
    auto row = detail::monomial_row(p10.unit(), 6);
    for (int j = 0; j < 28; ++j) m(27, j) = row[j];
    return determinant(m);
}

// N(p1..p9) = R(p1..p9; q) / C(p1..p9, q)^2, independent of the auxiliary
// point q. Requires the nine points to lie on exactly one cubic; two random
// choices of q must agree to 1e-8 relative.
inline Complex N_value(const PointSetC& nine, std::uint64_t seed = 7) {
    if (nine.size() != 9) throw WrongCardinality("N_value expects 9 points");
    auto cubics = ideal_component(nine, 3, 1e-9);
    if (cubics.size() != 1)
        throw DegenerateCubicSystem("nine points do not lie on a unique cubic");

    std::mt19937_64 rng(seed);
    std::array<Complex, 2> vals;
    for (int trial = 0; trial < 2; ++trial) {
        // keep the auxiliary candidate with the best-conditioned determinant;
        // complete intersections were already rejected above, so any generic
        // point works and the two-trial consistency check certifies it
        Complex c = 0;
        PointC q;
        for (int guard = 0; guard < 30; ++guard) {
            PointC cand(detail::random_real_point(rng));
            std::vector<PointC> ten = nine.points;
            ten.push_back(cand);
            Complex v = cubic_det(ten);
            if (std::abs(v) > std::abs(c)) {
                c = v;
                q = cand;
            }
        }
        if (c == Complex(0))
            throw DegenerateCubicSystem("could not find auxiliary point off the cubic");
        vals[trial] = R_det(nine, q) / (c * c);
    }
    double scale = std::max(std::abs(vals[0]), std::abs(vals[1]));
    double diff = std::abs(vals[0] - vals[1]);
    if (scale > 0 && diff > 1e-8 * scale)
        throw InconsistentQuotient("quotient disagrees between auxiliary points "
                                   "by relative " +
                                   std::to_string(diff / scale));
    return (vals[0] + vals[1]) * 0.5;
}

struct LambdaSample {
    Complex h27;   // det A_f at f = sum of sixth powers of unit representatives
    Complex n;     // Terracini quotient of the nine points
    Complex ratio; // h27 / n^2
};

// For nine points on a unique cubic, the degree-27 flattening determinant of
// f = sum p_i^6 (unit representatives) and the squared Terracini quotient are
// proportional with a configuration-independent constant.
inline LambdaSample lambda_sample(const PointSetC& nine, std::uint64_t seed = 7) {
    LambdaSample s;
    FormC f(6);
    for (const auto& p : nine.points) f = f + power_of_linear(p.unit(), 6);
    s.h27 = H27(f);
    s.n = N_value(nine, seed);
    if (std::abs(s.n) < 1e-300)
        throw DegenerateCubicSystem("Terracini quotient vanishes");
    s.ratio = s.h27 / (s.n * s.n);
    return s;
}

// Given eight points, find a ninth making the Terracini quotient vanish:
// restrict N to a random line p9(t) = q0 + t q1, scan the real axis for a
// sign change of the (near-real) restriction, bisect, then polish the
// parameter with a complex secant iteration.
inline PointC sample_point_on_nonic(const PointSetC& eight, std::uint64_t seed = 11) {
    if (eight.size() != 8) throw WrongCardinality("expected 8 points");
    std::mt19937_64 rng(seed);

    auto eval = [&](const std::array<Complex, 3>& q0,
                    const std::array<Complex, 3>& q1, double t,
                    double& out) -> bool {
        std::array<Complex, 3> p{q0[0] + t * q1[0], q0[1] + t * q1[1],
                                 q0[2] + t * q1[2]};
        PointSetC nine = eight;
        try {
            nine.points.push_back(PointC(p));
            Complex n = N_value(nine, seed + 3);
            if (std::abs(n.imag()) > 1e-6 * (1.0 + std::abs(n.real()))) return false;
            out = n.real();
            return true;
        } catch (const Error&) {
            return false;
        }
    };

    for (int line = 0; line < 10; ++line) {
        auto q0 = detail::random_real_point(rng);
        auto q1 = detail::random_real_point(rng);
        const int grid = 61;
        double prev_t = 0, prev_v = 0;
        bool have_prev = false;
        for (int i = 0; i < grid; ++i) {
            double t = -3.0 + 6.0 * i / (grid - 1);
            double v;
            if (!eval(q0, q1, t, v)) { have_prev = false; continue; }
            if (have_prev && prev_v * v < 0) {
                double lo = prev_t, hi = t, vlo = prev_v;
                for (int it = 0; it < 90; ++it) {
                    double mid = 0.5 * (lo + hi), vm;
                    if (!eval(q0, q1, mid, vm)) break;
                    if (vlo * vm <= 0) hi = mid;
                    else { lo = mid; vlo = vm; }
                }
                // polish with a complex secant step: for complex input
                // points the restriction is not exactly real, so the
                // bisected parameter sits a small complex distance away
                // from the true root of the quotient
                Complex tc(0.5 * (lo + hi), 0.0);
                auto evalc = [&](Complex t) -> Complex {
                    std::array<Complex, 3> p{q0[0] + t * q1[0],
                                             q0[1] + t * q1[1],
                                             q0[2] + t * q1[2]};
                    PointSetC nine = eight;
                    nine.points.push_back(PointC(p));
                    return N_value(nine, seed + 3);
                };
                try {
                    Complex g = evalc(tc);
                    for (int it = 0; it < 60 && std::abs(g) > 0; ++it) {
                        double h = 1e-7 * (1.0 + std::abs(tc));
                        Complex dg = (evalc(tc + h) - g) / h;
                        if (std::abs(dg) == 0) break;
                        Complex step = g / dg;
                        Complex tn = tc - step;
                        Complex gn = evalc(tn);
                        if (!(std::abs(gn) < std::abs(g))) break;
                        tc = tn;
                        g = gn;
                        if (std::abs(step) < 1e-15 * (1.0 + std::abs(tc)))
                            break;
                    }
                } catch (const Error&) {
                }
                return PointC({q0[0] + tc * q1[0], q0[1] + tc * q1[1],
                               q0[2] + tc * q1[2]});
            }
            prev_t = t;
            prev_v = v;
            have_prev = true;
        }
    }
    throw IllConditioned("no sign change of the Terracini quotient found");
}

} // namespace sextic

#endif
