#ifndef SEXTIC_SCALAR_HPP
#define SEXTIC_SCALAR_HPP

#include <cmath>
#include <complex>
#include <string>

#include <gmpxx.h>

#include "sextic/errors.hpp"

namespace sextic {

// The two scalar fields. Rational arithmetic is exact (mpq_class keeps
// values in lowest terms with positive denominator); Complex is IEEE double.
// Mixing the two in one computation is forbidden; the only bridge is the
// lossy to_complex conversion below.
using Rational = mpq_class;
using Complex = std::complex<double>;

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x, double = 0.0) { return sgn(x) == 0; }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
    static Rational conj(const Rational& x) { return x; }
};

template <>
struct field_traits<Complex> {
    static constexpr bool is_exact = false;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static bool is_zero(const Complex& x, double tol = 0.0) {
        return std::abs(x) <= tol;
    }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex conj(const Complex& x) { return std::conj(x); }
};

inline Complex to_complex(const Rational& x) { return Complex(x.get_d(), 0.0); }
inline Complex to_complex(const Complex& x) { return x; }

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Nearby rational with denominator <= max_den, by continued fractions.
inline Rational rationalize(double x, long max_den = 1000000L) {
    if (!std::isfinite(x)) throw ParseError("cannot rationalize non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1 == 0 ? 1 : q1);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

} // namespace sextic

#endif
