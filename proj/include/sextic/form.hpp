#ifndef SEXTIC_FORM_HPP
#define SEXTIC_FORM_HPP

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "sextic/errors.hpp"
#include "sextic/exponent.hpp"
#include "sextic/scalar.hpp"

namespace sextic {

// Homogeneous polynomial in x0,x1,x2 over K. Zero coefficients are never
// stored; the zero form is an empty coefficient map of the given degree.
template <class K>
class TernaryForm {
public:
    using Scalar = K;

    TernaryForm() : degree_(0) {}
    explicit TernaryForm(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Exponent, K>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    K coefficient(const Exponent& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? field_traits<K>::zero() : it->second;
    }

    void set(const Exponent& e, const K& v) {
        if (e.degree() != degree_)
            throw DegreeMismatch("exponent degree does not match form degree");
        if (field_traits<K>::is_zero(v))
            coeffs_.erase(e);
        else
            coeffs_[e] = v;
    }

    void add_term(const Exponent& e, const K& v) { set(e, coefficient(e) + v); }

    TernaryForm operator+(const TernaryForm& o) const {
        require_same_degree(o);
        TernaryForm r = *this;
        for (const auto& [e, v] : o.coeffs_) r.add_term(e, v);
        return r;
    }

    TernaryForm operator-(const TernaryForm& o) const {
        require_same_degree(o);
        TernaryForm r = *this;
        for (const auto& [e, v] : o.coeffs_) r.add_term(e, -v);
        return r;
    }

    TernaryForm operator*(const K& s) const {
        TernaryForm r(degree_);
        if (field_traits<K>::is_zero(s)) return r;
        for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * s;
        return r;
    }

    TernaryForm operator*(const TernaryForm& o) const {
        TernaryForm r(degree_ + o.degree_);
        for (const auto& [e1, v1] : coeffs_)
            for (const auto& [e2, v2] : o.coeffs_)
                r.add_term(e1 + e2, v1 * v2);
        return r;
    }

    // Coefficient vector in the global degree-d monomial order.
    std::vector<K> coefficient_vector() const {
        std::vector<K> out(monomial_count(degree_), field_traits<K>::zero());
        for (const auto& [e, v] : coeffs_) out[exponent_index(e)] = v;
        return out;
    }

    static TernaryForm from_vector(int degree, const std::vector<K>& v) {
        auto exps = exponents_of_degree(degree);
        TernaryForm f(degree);
        for (size_t i = 0; i < exps.size(); ++i)
            if (!field_traits<K>::is_zero(v[i])) f.coeffs_[exps[i]] = v[i];
        return f;
    }

    double norm2() const {
        double s = 0;
        for (const auto& [e, v] : coeffs_) {
            double m = field_traits<K>::magnitude(v);
            s += m * m;
        }
        return std::sqrt(s);
    }

private:
    void require_same_degree(const TernaryForm& o) const {
        if (degree_ != o.degree_)
            throw DegreeMismatch("cannot combine forms of different degree");
    }

    int degree_;
    std::map<Exponent, K> coeffs_;
};

using FormQ = TernaryForm<Rational>;
using FormC = TernaryForm<Complex>;

inline FormC to_complex(const FormQ& f) {
    FormC r(f.degree());
    for (const auto& [e, v] : f.coeffs()) r.set(e, to_complex(v));
    return r;
}
inline const FormC& to_complex(const FormC& f) { return f; }

// Interpret each monomial z^a of D as d^a and apply the sum to F.
template <class K>
TernaryForm<K> apply_operator(const TernaryForm<K>& D, const TernaryForm<K>& F) {
    if (D.degree() > F.degree())
        throw DegreeMismatch("operator degree exceeds form degree");
    TernaryForm<K> r(F.degree() - D.degree());
    for (const auto& [a, da] : D.coeffs())
        for (const auto& [b, fb] : F.coeffs())
            if (a.divides(b))
                r.add_term(b - a, da * fb * K(falling_factorial(b, a)));
    return r;
}

// (a x0 + b x1 + c x2)^d expanded in the monomial basis.
template <class K>
TernaryForm<K> power_of_linear(const std::array<K, 3>& p, int d) {
    if (field_traits<K>::is_zero(p[0]) && field_traits<K>::is_zero(p[1]) &&
        field_traits<K>::is_zero(p[2]))
        throw ZeroPoint("linear form has all coordinates zero");
    TernaryForm<K> r(d);
    for (const auto& e : exponents_of_degree(d)) {
        K c(factorial(d) / exponent_factorial(e));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) c = c * p[i];
        if (!field_traits<K>::is_zero(c)) r.set(e, c);
    }
    return r;
}

template <class K>
K evaluate(const TernaryForm<K>& F, const std::array<K, 3>& p) {
    K s = field_traits<K>::zero();
    for (const auto& [e, v] : F.coeffs()) {
        K t = v;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * p[i];
        s = s + t;
    }
    return s;
}

template <class K>
TernaryForm<K> partial(const TernaryForm<K>& F, int var) {
    TernaryForm<K> r(F.degree() > 0 ? F.degree() - 1 : 0);
    for (const auto& [e, v] : F.coeffs()) {
        int ev = e[var];
        if (ev == 0) continue;
        Exponent d = e;
        (var == 0 ? d.e0 : var == 1 ? d.e1 : d.e2) -= 1;
        r.add_term(d, v * K(ev));
    }
    return r;
}

// F(g x): substitute x_i -> sum_j g[i][j] x_j.
template <class K>
TernaryForm<K> compose(const TernaryForm<K>& F, const std::array<std::array<K, 3>, 3>& g) {
    std::array<TernaryForm<K>, 3> lin;
    for (int i = 0; i < 3; ++i) {
        lin[i] = TernaryForm<K>(1);
        for (int j = 0; j < 3; ++j)
            lin[i].add_term({j == 0, j == 1, j == 2}, g[i][j]);
    }
    TernaryForm<K> r(F.degree());
    for (const auto& [e, v] : F.coeffs()) {
        TernaryForm<K> t(0);
        t.set({0, 0, 0}, v);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * lin[i];
        r = r + t;
    }
    return r;
}

} // namespace sextic

#endif
