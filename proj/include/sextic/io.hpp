#ifndef SEXTIC_IO_HPP
#define SEXTIC_IO_HPP

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "sextic/errors.hpp"
#include "sextic/form.hpp"
#include "sextic/pointset.hpp"

namespace sextic {

using json = nlohmann::json;

using FormVariant = std::variant<FormQ, FormC>;
using PointSetVariant = std::variant<PointSetQ, PointSetC>;
using ExpressionVariant = std::variant<ExpressionQ, ExpressionC>;

namespace io {

// Scalars are rational strings "p/q" or [re, im] float pairs. A document
// must use one kind throughout; mixing exact and float entries is an error.
struct ScalarReader {
    bool seen_exact = false;
    bool seen_float = false;

    void note(bool exact) {
        (exact ? seen_exact : seen_float) = true;
        if (seen_exact && seen_float)
            throw ParseError("document mixes rational and float scalars");
    }

    bool is_exact_value(const json& v) const {
        if (v.is_string()) return true;
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return false;
        throw ParseError("scalar must be a rational string or an [re, im] pair");
    }

    Rational read_exact(const json& v) { return rational_from_string(v.get<std::string>()); }
    Complex read_float(const json& v) {
        return Complex(v[0].get<double>(), v[1].get<double>());
    }
};

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline json scalar_to_json(const Rational& v) { return rational_to_string(v); }
inline json scalar_to_json(const Complex& v) {
    return json::array({v.real(), v.imag()});
}

} // namespace io

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return j;
}

inline FormVariant parse_form(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients"))
        throw ParseError("form needs \"degree\" and \"coefficients\"");
    int degree = j["degree"].get<int>();
    if (degree < 0) throw ParseError("negative degree");
    io::ScalarReader sr;
    bool exact = true;
    const auto& terms = j["coefficients"];
    if (!terms.is_array()) throw ParseError("\"coefficients\" must be an array");
    if (!terms.empty()) exact = sr.is_exact_value(terms[0]["v"]);

    std::set<std::array<int, 3>> seen;
    auto read_exponent = [&](const json& t) {
        if (!t.is_object() || !t.contains("e") || !t.contains("v"))
            throw ParseError("coefficient entry needs \"e\" and \"v\"");
        const auto& e = t["e"];
        if (!e.is_array() || e.size() != 3)
            throw ParseError("\"e\" must have 3 entries");
        Exponent ex{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        if (ex.e0 < 0 || ex.e1 < 0 || ex.e2 < 0 || ex.degree() != degree)
            throw ParseError("exponent does not sum to the degree");
        if (!seen.insert({ex.e0, ex.e1, ex.e2}).second)
            throw ParseError("duplicate exponent");
        return ex;
    };

    if (exact) {
        FormQ f(degree);
        for (const auto& t : terms) {
            Exponent ex = read_exponent(t);
            sr.note(sr.is_exact_value(t["v"]));
            f.add_term(ex, sr.read_exact(t["v"]));
        }
        return f;
    }
    FormC f(degree);
    for (const auto& t : terms) {
        Exponent ex = read_exponent(t);
        sr.note(sr.is_exact_value(t["v"]));
        f.add_term(ex, sr.read_float(t["v"]));
    }
    return f;
}

inline PointSetVariant parse_points(const json& j) {
    if (!j.is_object() || !j.contains("points"))
        throw ParseError("point set needs \"points\"");
    const auto& pts = j["points"];
    if (!pts.is_array()) throw ParseError("\"points\" must be an array");
    io::ScalarReader sr;
    bool exact = true;
    if (!pts.empty()) {
        if (!pts[0].is_array() || pts[0].size() != 3)
            throw ParseError("each point needs 3 coordinates");
        exact = sr.is_exact_value(pts[0][0]);
    }
    if (exact) {
        PointSetQ z;
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 3)
                throw ParseError("each point needs 3 coordinates");
            std::array<Rational, 3> c;
            for (int i = 0; i < 3; ++i) {
                sr.note(sr.is_exact_value(p[i]));
                c[i] = sr.read_exact(p[i]);
            }
            z.points.push_back(PointQ(c));
        }
        return z;
    }
    PointSetC z;
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 3)
            throw ParseError("each point needs 3 coordinates");
        std::array<Complex, 3> c;
        for (int i = 0; i < 3; ++i) {
            sr.note(sr.is_exact_value(p[i]));
            c[i] = sr.read_float(p[i]);
        }
        z.points.push_back(PointC(c));
    }
    return z;
}

inline ExpressionVariant parse_expression(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("coefficients"))
        throw ParseError("expression needs \"points\" and \"coefficients\"");
    int degree = j.value("degree", 6);
    auto points = parse_points(j);
    const auto& cs = j["coefficients"];
    if (!cs.is_array()) throw ParseError("\"coefficients\" must be an array");
    io::ScalarReader sr;
    return std::visit(
        [&](auto&& z) -> ExpressionVariant {
            using Z = std::decay_t<decltype(z)>;
            constexpr bool exact = std::is_same_v<Z, PointSetQ>;
            if (cs.size() != z.size())
                throw ParseError("coefficient count does not match point count");
            WaringExpression<std::conditional_t<exact, Rational, Complex>> e;
            e.degree = degree;
            e.points = z;
            for (const auto& c : cs) {
                if (sr.is_exact_value(c) != exact)
                    throw ParseError("document mixes rational and float scalars");
                if constexpr (exact)
                    e.coefficients.push_back(sr.read_exact(c));
                else
                    e.coefficients.push_back(sr.read_float(c));
            }
            return e;
        },
        points);
}

template <class K>
json form_to_json(const TernaryForm<K>& f) {
    json terms = json::array();
    for (const auto& [e, v] : f.coeffs())
        terms.push_back({{"e", {e.e0, e.e1, e.e2}}, {"v", io::scalar_to_json(v)}});
    return {{"degree", f.degree()}, {"coefficients", terms}};
}

template <class K>
json points_to_json(const PointSet<K>& z) {
    json pts = json::array();
    for (const auto& p : z.points)
        pts.push_back({io::scalar_to_json(p.c[0]), io::scalar_to_json(p.c[1]),
                       io::scalar_to_json(p.c[2])});
    return {{"points", pts}};
}

template <class K>
json expression_to_json(const WaringExpression<K>& e) {
    json cs = json::array();
    for (const auto& c : e.coefficients) cs.push_back(io::scalar_to_json(c));
    json j = points_to_json(e.points);
    j["degree"] = e.degree;
    j["coefficients"] = cs;
    return j;
}

inline FormC form_as_complex(const FormVariant& v) {
    return std::visit([](auto&& f) { return to_complex(f); }, v);
}
inline PointSetC points_as_complex(const PointSetVariant& v) {
    return std::visit([](auto&& z) -> PointSetC { return to_complex(z); }, v);
}
inline ExpressionC expression_as_complex(const ExpressionVariant& v) {
    return std::visit([](auto&& e) -> ExpressionC { return to_complex(e); }, v);
}

} // namespace sextic

#endif
