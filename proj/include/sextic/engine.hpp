#ifndef SEXTIC_ENGINE_HPP
#define SEXTIC_ENGINE_HPP

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "sextic/catalecticant.hpp"
#include "sextic/flattening.hpp"
#include "sextic/form.hpp"
#include "sextic/intersect.hpp"
#include "sextic/matrix.hpp"
#include "sextic/pointset.hpp"
#include "sextic/terracini.hpp"

namespace sextic {

enum class Stratum { Generic10, S9, R, W, S8, Wprime, S7, LowRank };

inline const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Generic10: return "Generic10";
        case Stratum::S9: return "S9";
        case Stratum::R: return "R";
        case Stratum::W: return "W";
        case Stratum::S8: return "S8";
        case Stratum::Wprime: return "Wprime";
        case Stratum::S7: return "S7";
        case Stratum::LowRank: return "LowRank";
    }
    return "?";
}

// Labels certify membership in the closed conditions cut out by the rank of
// the middle catalecticant and the vanishing of the degree-27 invariant, not
// membership in the open strata.
struct StratumReport {
    int rank_C3 = 0;
    bool H27_vanishes = false;
    double h27_gap = 0; // relative smallest singular value of the 27x27 matrix
    Stratum label = Stratum::Generic10;
    std::string expected_decompositions; // "1", "2", "infinite", "unknown"
};

template <class K>
StratumReport classify(const TernaryForm<K>& F, double tol = 1e-9) {
    if (F.degree() != 6) throw WrongDegree("classify expects a sextic");
    StratumReport r;
    r.rank_C3 = rank(catalecticant(F, 3).matrix, tol);
    FormC Fc = to_complex(F);
    r.h27_gap = h27_relative_gap(Fc);
    // exact input gets an exact vanishing decision, like the rank above; the
    // normalized-gap test is the float fallback
    if constexpr (field_traits<K>::is_exact)
        r.H27_vanishes = sgn(H27(F)) == 0;
    else
        r.H27_vanishes = r.h27_gap <= tol;
    switch (r.rank_C3) {
        case 10:
            r.label = Stratum::Generic10;
            r.expected_decompositions = "unknown";
            break;
        case 9:
            r.label = r.H27_vanishes ? Stratum::R : Stratum::S9;
            r.expected_decompositions = r.H27_vanishes ? "1" : "2";
            break;
        case 8:
            r.label = r.H27_vanishes ? Stratum::S8 : Stratum::W;
            r.expected_decompositions = "1";
            break;
        case 7:
            r.label = r.H27_vanishes ? Stratum::S7 : Stratum::Wprime;
            r.expected_decompositions = r.H27_vanishes ? "1" : "infinite";
            break;
        default:
            r.label = Stratum::LowRank;
            r.expected_decompositions = "unknown";
            break;
    }
    return r;
}

enum class DecompositionVerdict { Rank8, Rank9_CI };

struct Decomposition {
    PointSetC Z;            // the 9 base points of the apolar cubic pencil
    ExpressionC expression; // 8 or 9 summands per the verdict
    DecompositionVerdict verdict = DecompositionVerdict::Rank9_CI;
    double residual = 0;
};

// Kernel of the middle catalecticant as cubic forms, exact when possible.
template <class K>
std::vector<FormC> apolar_cubics(const TernaryForm<K>& F, double tol = 1e-9) {
    auto ker = apolar_component(F, 3, tol);
    std::vector<FormC> out;
    for (const auto& c : ker) out.push_back(to_complex(c));
    return out;
}

// Waring decomposition of a form whose apolar ideal contains a pencil of
// cubics: intersect the pencil, solve for coefficients over the 9 base
// points, and drop the unique vanishing summand when there is one.
template <class K>
Decomposition decompose_via_kernel_cubics(const TernaryForm<K>& F,
                                          double tol = 1e-9,
                                          std::uint64_t seed = 1) {
    if (F.degree() != 6) throw WrongDegree("expected a sextic");
    auto cubics = apolar_cubics(F, tol);
    if (cubics.size() != 2)
        throw KernelWrongSize("apolar cubic system has dimension " +
                              std::to_string(cubics.size()) + ", need 2");
    auto inter = intersect_cubics(cubics[0], cubics[1], seed);
    Decomposition d;
    for (const auto& ip : inter) {
        if (ip.multiplicity != 1)
            throw NonReducedIntersection("base point of multiplicity " +
                                         std::to_string(ip.multiplicity));
        d.Z.points.push_back(ip.point);
    }
    if (d.Z.size() != 9)
        throw NonReducedIntersection("expected 9 distinct base points, got " +
                                     std::to_string(d.Z.size()));

    FormC Fc = to_complex(F);
    auto [a, residual] = span_membership(Fc, d.Z);
    d.residual = residual / Fc.norm2();
    if (d.residual > 1e-8)
        throw ResidualTooLarge("relative residual " + std::to_string(d.residual));

    // weight each coefficient by its summand's norm so the verdict does not
    // depend on the projective representatives
    std::vector<double> w(a.size());
    double wmax = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        w[i] = std::abs(a[i]) * power_of_linear(d.Z.points[i].c, 6).norm2();
        wmax = std::max(wmax, w[i]);
    }
    std::vector<size_t> zero;
    for (size_t i = 0; i < a.size(); ++i)
        if (w[i] < 1e-7 * wmax) zero.push_back(i);

    d.expression.degree = 6;
    if (zero.size() == 1) {
        d.verdict = DecompositionVerdict::Rank8;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == zero.front()) continue;
            d.expression.points.points.push_back(d.Z.points[i]);
            d.expression.coefficients.push_back(a[i]);
        }
    } else {
        d.verdict = DecompositionVerdict::Rank9_CI;
        d.expression.points = d.Z;
        d.expression.coefficients = a;
    }
    return d;
}

// The unique sextic apolar to three pairwise coprime cubics, i.e. the
// one-point intersection of the spans of the sixth powers over C1^C2 and
// C1^C3. The span conditions are imposed through the apolarity pairing:
// F lies in the span of the sixth powers over an intersection iff every
// degree-6 element of the corresponding complete-intersection ideal
// annihilates F, and those elements are the cubic multiples of the two
// curves. Exact over the rationals for rational input.
template <class K>
TernaryForm<K> construct_Wprime_form(const TernaryForm<K>& C1,
                                     const TernaryForm<K>& C2,
                                     const TernaryForm<K>& C3,
                                     double tol = 1e-9) {
    const TernaryForm<K>* cs[3] = {&C1, &C2, &C3};
    for (auto* c : cs)
        if (c->degree() != 3 || c->is_zero())
            throw WrongDegree("expected three nonzero cubics");
    if (common_factor(C1, C2, tol) || common_factor(C1, C3, tol) ||
        common_factor(C2, C3, tol))
        throw DegenerateConfiguration("cubics are not pairwise coprime");

    auto sextics = exponents_of_degree(6);
    auto gammas = exponents_of_degree(3);
    Matrix<K> cond(static_cast<int>(3 * gammas.size()),
                   static_cast<int>(sextics.size()));
    int row = 0;
    for (auto* c : cs)
        for (const auto& gamma : gammas) {
            TernaryForm<K> mono(3);
            mono.set(gamma, field_traits<K>::one());
            TernaryForm<K> g = (*c) * mono;
            for (size_t j = 0; j < sextics.size(); ++j)
                cond(row, static_cast<int>(j)) =
                    g.coefficient(sextics[j]) * K(exponent_factorial(sextics[j]));
            ++row;
        }
    auto ker = kernel_basis(cond, tol);
    if (ker.size() != 1)
        throw DegenerateConfiguration("apolar sextic space has dimension " +
                                      std::to_string(ker.size()));
    TernaryForm<K> F = TernaryForm<K>::from_vector(6, ker.front());

    auto cubics = apolar_component(F, 3, tol);
    if (cubics.size() != 3)
        throw DegenerateConfiguration("apolar cubic system has dimension " +
                                      std::to_string(cubics.size()));
    for (auto* c : cs) {
        FormC rc = apply_operator(to_complex(*c), to_complex(F));
        if (rc.norm2() > 1e-8 * to_complex(F).norm2() * to_complex(*c).norm2())
            throw DegenerateConfiguration("input cubic is not apolar to the result");
    }
    if constexpr (!field_traits<K>::is_exact) {
        double n = F.norm2();
        F = F * (field_traits<K>::one() / K(n));
    }
    return F;
}

// Hilbert-Burch data of 9 points with a unique cubic through them: the
// minimal resolution 0 -> R(-5)^3 -> R(-4)^3 + R(-3) -> I -> 0. linear[i][j]
// is the entry of syzygy j at quartic generator i; quadric[j] is its entry
// at the cubic generator.
struct HilbertBurch {
    FormC cubic;
    std::array<FormC, 3> quartics;
    std::array<std::array<FormC, 3>, 3> linear;
    std::array<FormC, 3> quadric;
};

inline HilbertBurch hilbert_burch(const PointSetC& A, double tol = 1e-9) {
    if (h_vector(A, tol) != HVector{{1, 2, 3, 3}})
        throw WrongHVector("points do not have h-vector (1,2,3,3)");
    HilbertBurch hb;
    auto cubics = ideal_component(A, 3, tol);
    hb.cubic = cubics.front() * Complex(1.0 / cubics.front().norm2());
    auto quartic_space = ideal_component(A, 4, tol);
    if (quartic_space.size() != 6)
        throw WrongHVector("quartic piece of the ideal has wrong dimension");

    // Complete the three coordinate multiples of the cubic to a basis of the
    // quartic piece, greedily keeping quartics that enlarge the span.
    std::vector<FormC> gens;
    for (int t = 0; t < 3; ++t) {
        FormC x(1);
        x.set(t == 0 ? Exponent{1, 0, 0} : t == 1 ? Exponent{0, 1, 0}
                                                  : Exponent{0, 0, 1},
              Complex(1));
        gens.push_back(hb.cubic * x);
    }
    int found = 0;
    for (const auto& q : quartic_space) {
        if (found == 3) break;
        std::vector<FormC> trial = gens;
        trial.push_back(q);
        MatrixC m(15, static_cast<int>(trial.size()));
        for (size_t j = 0; j < trial.size(); ++j) {
            auto col = trial[j].coefficient_vector();
            for (int i = 0; i < 15; ++i) m(i, static_cast<int>(j)) = col[i];
        }
        if (rank(m, tol) == static_cast<int>(trial.size())) {
            gens = trial;
            hb.quartics[found] = q * Complex(1.0 / q.norm2());
            ++found;
        }
    }
    if (found != 3) throw WrongHVector("could not complete quartic generators");

    // Degree-5 syzygies: quadric*cubic + sum_i linear_i*quartic_i = 0.
    // Unknowns: 6 quadric coefficients then 3x3 linear coefficients.
    MatrixC syz(21, 15);
    {
        MatrixC mc = multiplication_matrix(hb.cubic, 2);
        for (int i = 0; i < 21; ++i)
            for (int j = 0; j < 6; ++j) syz(i, j) = mc(i, j);
        for (int g = 0; g < 3; ++g) {
            MatrixC mq = multiplication_matrix(hb.quartics[g], 1);
            for (int i = 0; i < 21; ++i)
                for (int j = 0; j < 3; ++j) syz(i, 6 + 3 * g + j) = mq(i, j);
        }
    }
    auto ker = kernel_basis(syz, tol);
    if (ker.size() != 3)
        throw SyzygyRankUnexpected("syzygy space has dimension " +
                                   std::to_string(ker.size()));
    for (int j = 0; j < 3; ++j) {
        std::vector<Complex> qv(ker[j].begin(), ker[j].begin() + 6);
        hb.quadric[j] = FormC::from_vector(2, qv);
        for (int i = 0; i < 3; ++i) {
            std::vector<Complex> lv(ker[j].begin() + 6 + 3 * i,
                                    ker[j].begin() + 6 + 3 * (i + 1));
            hb.linear[i][j] = FormC::from_vector(1, lv);
        }
    }
    return hb;
}

namespace detail {

inline FormC det3(const FormC& a0, const FormC& a1, const FormC& a2,
                  const FormC& b0, const FormC& b1, const FormC& b2,
                  const FormC& c0, const FormC& c1, const FormC& c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
           a2 * (b0 * c1 - b1 * c0);
}

} // namespace detail

struct SecondDecomposition {
    PointSetC B;
    ExpressionC expression;
    double residual = 0;
    HVector union_h_vector;
};

// The residual decomposition linked to a known one: erase the quadric row of
// the Hilbert-Burch matrix, append an unknown column of three quadrics, and
// require the three quartic minors of the widened matrix to annihilate F.
// The solution is unique modulo adding column combinations with linear-form
// coefficients, which shift the minors by multiples of the cubic and change
// nothing; the genuine direction is separated from that 9-dimensional shift
// space by a stacked least-squares kernel. The minors then generate the
// ideal of the 9 residual points.
template <class K>
SecondDecomposition second_decomposition(const TernaryForm<K>& F_in,
                                         const PointSetC& A, double tol = 1e-9,
                                         std::uint64_t seed = 1) {
    FormC F = to_complex(F_in);
    if (F.degree() != 6) throw WrongDegree("expected a sextic");
    const Complex scale(1.0 / F.norm2());
    F = F * scale;
    {
        auto [a, res] = span_membership(F, A);
        (void)a;
        if (res > 1e-8)
            throw ResidualTooLarge("input decomposition residual " +
                                   std::to_string(res));
    }
    HilbertBurch hb = hilbert_burch(A, tol);
    if (rank(catalecticant(F, 3).matrix, tol) != 9)
        throw KernelWrongSize("apolar cubic system must be 1-dimensional");

    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    auto quadratics = exponents_of_degree(2);

    // Either orientation of the syzygy block can carry the genuine solution;
    // for some inputs one of them only admits the trivial family whose
    // minors are all multiples of the cubic, so try both.
    FormC cubic;
    std::array<FormC, 3> quartic;
    int main_q = -1;
    std::string orient_error = "apolarity system never solved";
    for (int orient = 0; orient < 2 && main_q < 0; ++orient) {
        auto L = [&](int i, int j) {
            return orient == 0 ? hb.linear[i][j] : hb.linear[j][i];
        };
        // Cofactor quadrics: minor(a,b) = sum_i sign_i * Q_i * cof[a][b][i]
        // where cof is the 2x2 determinant of columns a,b without row i.
        auto cof = [&](int a, int b, int i) {
            int r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
            FormC d = L(r0, a) * L(r1, b) - L(r0, b) * L(r1, a);
            return (i == 1) ? d * Complex(-1) : d;
        };

        // 18 unknowns: coefficient m of quadric Q_i. Constraint rows: for
        // each minor, the 6 coefficients of the order-4 contraction with F.
        MatrixC sys(18, 18);
        for (int i = 0; i < 3; ++i)
            for (size_t m = 0; m < 6; ++m) {
                int colidx = i * 6 + static_cast<int>(m);
                FormC mono(2);
                mono.set(quadratics[m], Complex(1));
                for (int p = 0; p < 3; ++p) {
                    FormC contrib = mono * cof(pairs[p][0], pairs[p][1], i);
                    auto vec = apply_operator(contrib, F).coefficient_vector();
                    for (int r = 0; r < 6; ++r) sys(p * 6 + r, colidx) = vec[r];
                }
            }

        // Shift directions: Q_i = w * L(i,a) for w a degree-1 monomial.
        MatrixC shifts(18, 9);
        for (int a = 0; a < 3; ++a)
            for (int t = 0; t < 3; ++t) {
                FormC x(1);
                x.set(t == 0 ? Exponent{1, 0, 0} : t == 1 ? Exponent{0, 1, 0}
                                                          : Exponent{0, 0, 1},
                      Complex(1));
                for (int i = 0; i < 3; ++i) {
                    auto vec = (x * L(i, a)).coefficient_vector();
                    for (size_t m = 0; m < 6; ++m)
                        shifts(i * 6 + static_cast<int>(m), 3 * a + t) = vec[m];
                }
            }

        // The genuine solution is the kernel direction orthogonal to the
        // shifts.
        MatrixC stacked(27, 18);
        double sysmax = 0;
        for (int i = 0; i < 18; ++i)
            for (int j = 0; j < 18; ++j)
                sysmax = std::max(sysmax, std::abs(sys(i, j)));
        if (sysmax == 0) {
            orient_error = "apolarity system is identically zero";
            continue;
        }
        for (int i = 0; i < 18; ++i)
            for (int j = 0; j < 18; ++j) stacked(i, j) = sys(i, j) / sysmax;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 18; ++j)
                stacked(18 + i, j) = std::conj(shifts(j, i));
        auto ker = kernel_basis(stacked, 1e-7);
        if (ker.size() != 1) {
            orient_error = "apolarity system kernel has dimension " +
                           std::to_string(ker.size()) + " beyond the shifts";
            continue;
        }

        std::array<FormC, 3> Q;
        for (int i = 0; i < 3; ++i) {
            std::vector<Complex> qv(ker[0].begin() + 6 * i,
                                    ker[0].begin() + 6 * (i + 1));
            Q[i] = FormC::from_vector(2, qv);
        }

        // Generators of the residual ideal: the cubic minor of the three
        // linear columns and the quartic minors involving the quadric column.
        FormC cub = detail::det3(L(0, 0), L(0, 1), L(0, 2), L(1, 0), L(1, 1),
                                 L(1, 2), L(2, 0), L(2, 1), L(2, 2));
        if (cub.norm2() < 1e-12) {
            orient_error = "cubic minor vanishes";
            continue;
        }
        cub = cub * Complex(1.0 / cub.norm2());
        std::array<FormC, 3> quar;
        bool bad = false;
        for (int p = 0; p < 3; ++p) {
            int a = pairs[p][0], b = pairs[p][1];
            quar[p] = detail::det3(L(0, a), L(0, b), Q[0], L(1, a), L(1, b),
                                   Q[1], L(2, a), L(2, b), Q[2]);
            if (quar[p].norm2() < 1e-12) {
                bad = true;
                break;
            }
            quar[p] = quar[p] * Complex(1.0 / quar[p].norm2());
        }
        if (bad) {
            orient_error = "quartic minor vanishes";
            continue;
        }

        // The solution can still be the trivial one whose minors all share
        // the cubic; a usable orientation has a coprime minor to intersect.
        for (int p = 0; p < 3; ++p)
            if (!common_factor(cub, quar[p])) {
                main_q = p;
                break;
            }
        if (main_q < 0) {
            orient_error = "every quartic minor shares the cubic factor";
            continue;
        }
        cubic = cub;
        quartic = quar;
    }
    if (main_q < 0) throw NoSolution(orient_error);

    // 12 intersection points of the cubic with that quartic, filtered by the
    // other two quartics down to the 9 residual points. A coordinate change
    // occasionally conflates close roots, so retry with fresh ones.
    SecondDecomposition out;
    int kept = 0;
    std::string stage_error = "intersection stage never ran";
    for (std::uint64_t sub = 0; sub < 5; ++sub) {
        std::vector<IntersectionPoint> inter;
        try {
            inter = intersect_curves(cubic, quartic[main_q], seed + sub);
        } catch (const IllConditioned& e) {
            stage_error = e.what();
            continue;
        }
        kept = 0;
        out.B.points.clear();
        for (const auto& ip : inter) {
            auto u = ip.point.unit();
            double v1 = std::abs(evaluate(quartic[(main_q + 1) % 3], u));
            double v2 = std::abs(evaluate(quartic[(main_q + 2) % 3], u));
            if (v1 < 1e-7 && v2 < 1e-7) {
                kept += ip.multiplicity;
                if (ip.multiplicity == 1) out.B.points.push_back(ip.point);
            }
        }
        if (kept == 9 && out.B.size() == 9) break;
        stage_error = "expected 9 distinct residual points, kept " +
                      std::to_string(kept) + " counting multiplicity, " +
                      std::to_string(out.B.size()) + " distinct";
    }
    if (kept != 9 || out.B.size() != 9) throw FilterMiscount(stage_error);

    auto [b, res] = span_membership(F, out.B);
    out.residual = res;
    if (res > 1e-8)
        throw ResidualTooLarge("residual expression misfit " + std::to_string(res));
    out.expression.degree = 6;
    out.expression.points = out.B;
    // the fit was made against the normalized form; undo the scaling so the
    // coefficients reconstruct the caller's input
    for (auto& c : b) c /= scale;
    out.expression.coefficients = b;

    for (const auto& p : A.points)
        if (out.B.contains(p))
            throw FilterMiscount("residual point coincides with an input point");

    PointSetC un = A;
    for (const auto& p : out.B.points) un.points.push_back(p);
    out.union_h_vector = h_vector(un, tol);
    if (out.union_h_vector != HVector{{1, 2, 3, 3, 3, 3, 2, 1}})
        throw WrongHVector("union of the two decompositions is not a (3,6) "
                           "complete intersection");
    return out;
}

struct VerifyResult {
    double residual = 0;
    bool non_redundant = false;
};

template <class K, class K2>
VerifyResult verify_expression(const TernaryForm<K>& F,
                               const WaringExpression<K2>& expr,
                               double tol = 1e-9) {
    FormC Fc = to_complex(F);
    ExpressionC e = to_complex(expr);
    if (Fc.degree() != e.degree) throw DegreeMismatch("degree mismatch");
    VerifyResult r;
    FormC diff = Fc - e.reconstruct();
    r.residual = diff.norm2() / Fc.norm2();
    // weight each coefficient by the norm of its summand so that the zero
    // test does not depend on the chosen projective representatives
    std::vector<double> w(e.coefficients.size(), 0.0);
    double wmax = 0;
    for (size_t j = 0; j < e.coefficients.size(); ++j) {
        w[j] = std::abs(e.coefficients[j]) *
               power_of_linear(e.points.points[j].c, e.degree).norm2();
        wmax = std::max(wmax, w[j]);
    }
    bool nonzero = wmax > 0;
    for (double wj : w)
        if (wj <= tol * wmax) nonzero = false;
    // unit-norm columns keep the rank test representative-independent too
    MatrixC m(monomial_count(e.degree), static_cast<int>(e.points.size()));
    for (size_t j = 0; j < e.points.size(); ++j) {
        auto f = power_of_linear(e.points.points[j].c, e.degree);
        double n = f.norm2();
        if (n == 0) n = 1;
        auto col = f.coefficient_vector();
        for (size_t i = 0; i < col.size(); ++i)
            m(static_cast<int>(i), static_cast<int>(j)) = col[i] / n;
    }
    bool independent =
        rank(m, tol) == static_cast<int>(e.points.size());
    r.non_redundant = nonzero && independent;
    return r;
}

// Deterministic random sextic of prescribed catalecticant rank, with its
// witness expression: integer points of height at most 10 and small nonzero
// integer coefficients, resampled until the rank is min(rank_target, 10).
inline std::pair<FormQ, ExpressionQ> random_form(int rank_target,
                                                 std::uint64_t seed) {
    if (rank_target < 1 || rank_target > 10)
        throw WrongCardinality("rank target must be between 1 and 10");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-10, 10);
    std::uniform_int_distribution<int> coeff(1, 9);
    for (int attempt = 0; attempt < 200; ++attempt) {
        ExpressionQ e;
        e.degree = 6;
        while (static_cast<int>(e.points.size()) < rank_target) {
            std::array<Rational, 3> c{Rational(coord(rng)), Rational(coord(rng)),
                                      Rational(coord(rng))};
            if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
            PointQ p(c);
            if (e.points.contains(p)) continue;
            e.points.points.push_back(p);
            int a = coeff(rng);
            e.coefficients.push_back(Rational(rng() % 2 ? a : -a));
        }
        FormQ F = e.reconstruct();
        if (rank(catalecticant(F, 3).matrix) == std::min(rank_target, 10))
            return {F, e};
    }
    throw IllConditioned("failed to generate a form of the requested rank");
}

} // namespace sextic

#endif
