#ifndef SEXTIC_EXPONENT_HPP
#define SEXTIC_EXPONENT_HPP

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace sextic {

// Exponent of a monomial x0^e0 x1^e1 x2^e2. The global monomial order is
// graded lexicographic with x0 > x1 > x2; every matrix row/column layout and
// file format in the project uses this order.
struct Exponent {
    int e0 = 0, e1 = 0, e2 = 0;

    int degree() const { return e0 + e1 + e2; }
    int operator[](int i) const { return i == 0 ? e0 : (i == 1 ? e1 : e2); }

    bool operator==(const Exponent&) const = default;

    // Graded lex: lower degree first, then lexicographically descending
    // in (e0, e1, e2), so x0^d comes first within its degree block.
    bool operator<(const Exponent& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        if (e0 != o.e0) return e0 > o.e0;
        return e1 > o.e1;
    }

    bool divides(const Exponent& o) const {
        return e0 <= o.e0 && e1 <= o.e1 && e2 <= o.e2;
    }

    Exponent operator+(const Exponent& o) const {
        return {e0 + o.e0, e1 + o.e1, e2 + o.e2};
    }
    Exponent operator-(const Exponent& o) const {
        return {e0 - o.e0, e1 - o.e1, e2 - o.e2};
    }
};

inline int monomial_count(int d) { return (d + 1) * (d + 2) / 2; }

// All degree-d exponents in the global order.
inline std::vector<Exponent> exponents_of_degree(int d) {
    std::vector<Exponent> out;
    out.reserve(monomial_count(d));
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            out.push_back({a, b, d - a - b});
    return out;
}

// Index of e within exponents_of_degree(e.degree()).
inline int exponent_index(const Exponent& e) {
    int d = e.degree();
    int idx = 0;
    for (int a = d; a > e.e0; --a) idx += d - a + 1;
    idx += d - e.e0 - e.e1;
    return idx;
}

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// e! = e0! e1! e2!
inline std::int64_t exponent_factorial(const Exponent& e) {
    return factorial(e.e0) * factorial(e.e1) * factorial(e.e2);
}

// beta! / (beta - alpha)!, the scalar produced by applying d^alpha to x^beta.
inline std::int64_t falling_factorial(const Exponent& beta, const Exponent& alpha) {
    assert(alpha.divides(beta));
    return exponent_factorial(beta) / exponent_factorial(beta - alpha);
}

} // namespace sextic

#endif
