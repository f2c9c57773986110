#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/io.hpp"

using namespace sextic;

TEST_CASE("rational forms round-trip through JSON") {
    FormQ f(6);
    f.set({6, 0, 0}, Rational(3, 7));
    f.set({2, 2, 2}, Rational(-5));
    json j = form_to_json(f);
    auto back = parse_form(j);
    REQUIRE(std::holds_alternative<FormQ>(back));
    CHECK((std::get<FormQ>(back) - f).is_zero());
}

TEST_CASE("float forms round-trip through JSON") {
    FormC f(6);
    f.set({6, 0, 0}, Complex(0.125, -2.5));
    f.set({0, 0, 6}, Complex(1e-9, 3));
    json j = form_to_json(f);
    auto back = parse_form(j);
    REQUIRE(std::holds_alternative<FormC>(back));
    CHECK((std::get<FormC>(back) - f).norm2() == 0.0);
}

TEST_CASE("malformed forms are rejected") {
    CHECK_THROWS_AS(parse_form(json{{"coefficients", json::array()}}), ParseError);
    // exponent sum must match the degree
    json wrong = {{"degree", 6},
                  {"coefficients",
                   json::array({{{"e", {1, 0, 0}}, {"v", "1"}}})}};
    CHECK_THROWS_AS(parse_form(wrong), ParseError);
    // duplicate exponents
    json dup = {{"degree", 6},
                {"coefficients",
                 json::array({{{"e", {6, 0, 0}}, {"v", "1"}},
                              {{"e", {6, 0, 0}}, {"v", "2"}}})}};
    CHECK_THROWS_AS(parse_form(dup), ParseError);
    // mixed scalar kinds
    json mixed = {{"degree", 6},
                  {"coefficients",
                   json::array({{{"e", {6, 0, 0}}, {"v", "1"}},
                                {{"e", {0, 6, 0}}, {"v", {1.0, 0.0}}}})}};
    CHECK_THROWS_AS(parse_form(mixed), ParseError);
}

TEST_CASE("point sets round-trip and normalize on input") {
    json j = {{"points", json::array({{"4", "6", "2"}, {"1", "0", "0"}})}};
    auto v = parse_points(j);
    REQUIRE(std::holds_alternative<PointSetQ>(v));
    const auto& z = std::get<PointSetQ>(v);
    REQUIRE(z.size() == 2);
    CHECK(z.points[0].c[0] == 2);
    CHECK(z.points[0].c[1] == 3);
    CHECK(z.points[0].c[2] == 1);

    json back = points_to_json(z);
    auto again = parse_points(back);
    CHECK(std::get<PointSetQ>(again).points[0].c == z.points[0].c);

    json jf = {{"points", json::array({json::array(
                   {{1.0, 0.0}, {0.5, -1.0}, {1.0, 0.0}})})}};
    auto vf = parse_points(jf);
    REQUIRE(std::holds_alternative<PointSetC>(vf));

    CHECK_THROWS_AS(parse_points(json{{"points", json::array({json::array({"1", "2"})})}}),
                    ParseError);
}

TEST_CASE("expressions round-trip with their coefficients") {
    ExpressionQ e;
    e.degree = 6;
    e.points.points.push_back(PointQ({Rational(1), Rational(2), Rational(1)}));
    e.points.points.push_back(PointQ({Rational(-1), Rational(0), Rational(1)}));
    e.coefficients = {Rational(5), Rational(-7, 3)};
    json j = expression_to_json(e);
    auto back = parse_expression(j);
    REQUIRE(std::holds_alternative<ExpressionQ>(back));
    const auto& eb = std::get<ExpressionQ>(back);
    CHECK(eb.degree == 6);
    CHECK(eb.coefficients == e.coefficients);
    CHECK((eb.reconstruct() - e.reconstruct()).is_zero());

    // coefficient count must match the points
    json short_coeffs = j;
    short_coeffs["coefficients"] = json::array({"5"});
    CHECK_THROWS_AS(parse_expression(short_coeffs), ParseError);
}

TEST_CASE("bundled fixtures parse and are internally consistent") {
    const std::string dir = SEXTIC_FIXTURES;
    auto fv = parse_form(load_json_file(dir + "/sextic_810.json"));
    REQUIRE(std::holds_alternative<FormQ>(fv));
    CHECK(std::get<FormQ>(fv).coefficient({2, 2, 2}) == 810);

    auto ev = parse_expression(load_json_file(dir + "/expression_810.json"));
    REQUIRE(std::holds_alternative<ExpressionC>(ev));
    CHECK(std::get<ExpressionC>(ev).points.size() == 9);

    auto pv = parse_points(load_json_file(dir + "/ci33_points.json"));
    REQUIRE(std::holds_alternative<PointSetQ>(pv));
    CHECK(std::get<PointSetQ>(pv).size() == 9);

    auto pv6 = parse_points(load_json_file(dir + "/ci36_points.json"));
    CHECK(std::get<PointSetQ>(pv6).size() == 18);

    auto f8 = parse_form(load_json_file(dir + "/rank8_form.json"));
    auto w8 = parse_expression(load_json_file(dir + "/rank8_witness.json"));
    FormQ F = std::get<FormQ>(f8);
    CHECK((std::get<ExpressionQ>(w8).reconstruct() - F).is_zero());

    CHECK_THROWS_AS(load_json_file(dir + "/no_such_file.json"), ParseError);
}

TEST_CASE("doubles are printed with 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(1.0) == "1");
}
