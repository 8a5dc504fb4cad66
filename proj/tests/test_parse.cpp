#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gwa/parse.hpp"

using namespace gwa;

namespace {
Poly P(std::initializer_list<std::pair<int, Rational>> cs) {
    Poly p;
    for (const auto &[deg, c] : cs) p.set_coeff(deg, c);
    return p;
}
} // namespace

TEST_CASE("polynomial values") {
    REQUIRE(parse_poly_value("h^2+h+1", false) ==
            LaurentPoly(P({{2, 1}, {1, 1}, {0, 1}})));
    REQUIRE(parse_poly_value("4*h^2 + 2*h + 1", false) ==
            LaurentPoly(P({{2, 4}, {1, 2}, {0, 1}})));
    REQUIRE(parse_poly_value("(h-1)*(h-2)", false) ==
            LaurentPoly(P({{2, 1}, {1, -3}, {0, 2}})));
    REQUIRE(parse_poly_value("1/2*h - 3/4", false) ==
            LaurentPoly(P({{1, make_rational(1, 2)}, {0, make_rational(-3, 4)}})));
    // Precedence: ^ binds tighter than *, * tighter than unary -, unary -
    // tighter than binary +.
    REQUIRE(parse_poly_value("-h^2", false) == LaurentPoly(P({{2, -1}})));
    REQUIRE(parse_poly_value("2*h^3", false) == LaurentPoly(P({{3, 2}})));
    REQUIRE(parse_poly_value("-2*h+1", false) == LaurentPoly(P({{1, -2}, {0, 1}})));
    REQUIRE(parse_poly_value("1-2-3", false) == LaurentPoly(Rational(-4)));
    REQUIRE(parse_poly_value("(h+1)^3", false) ==
            LaurentPoly(P({{3, 1}, {2, 3}, {1, 3}, {0, 1}})));

    // Laurent monomials only when permitted.
    REQUIRE(parse_poly_value("h^-2 + h", true) ==
            LaurentPoly(-2, P({{3, 1}, {0, 1}})));
    REQUIRE(parse_poly_value("3*h^-1", true) == LaurentPoly::monomial(3, -1));
    REQUIRE_THROWS_AS(parse_poly_value("h^-1", false), parse_error);
    REQUIRE_THROWS_AS(parse_poly_value("(h+1)^-1", true), parse_error);

    // x and y are rejected in a polynomial value.
    REQUIRE_THROWS_AS(parse_poly_value("x+1", false), parse_error);
    REQUIRE_THROWS_AS(parse_poly_value("h*y", false), parse_error);
}

TEST_CASE("parse errors carry a position") {
    auto pos_of = [](std::string_view text) -> std::size_t {
        try {
            parse_poly_value(text, false);
        } catch (const parse_error &e) {
            return e.position;
        }
        FAIL("expected parse_error");
        return 0;
    };
    REQUIRE(pos_of("h + $") == 4);
    REQUIRE(pos_of("h^(2)") == 2);   // exponent must be a literal
    REQUIRE(pos_of("(h+1") == 4);    // missing ')'
    REQUIRE(pos_of("h 2") == 2);     // trailing input
    REQUIRE(pos_of("1/0") == 2);     // zero denominator
    REQUIRE(pos_of("+h") == 0);      // no leading binary operator
}

TEST_CASE("element expressions respect the defining relations") {
    auto A = GwaPresentation::quantum(2, P({{3, 1}, {1, 1}}));
    // x*y = sigma(a), y*x = a.
    REQUIRE(parse_element_expr("x*y", A) ==
            parse_element_expr("8*h^3 + 2*h", A));
    REQUIRE(parse_element_expr("y*x", A) == parse_element_expr("h^3 + h", A));
    // x*h = 2h*x: both sides normalize identically.
    REQUIRE(parse_element_expr("x*h", A) == parse_element_expr("2*h*x", A));
    REQUIRE(parse_element_expr("(x+y)^2", A) ==
            parse_element_expr("x^2 + x*y + y*x + y^2", A));
    // Negative h powers need the Laurent base.
    REQUIRE_THROWS_AS(parse_element_expr("h^-1", A), parse_error);
    auto L = GwaPresentation::laurent(2, LaurentPoly(P({{1, 1}, {0, 1}})));
    auto e = parse_element_expr("h^-1 * x", L);
    REQUIRE(e.degree_support() == std::vector<int>{1});
}

TEST_CASE("algebra specifications round-trip") {
    const char *corpus[] = {
        "gwa q=2 a=\"h^2+h+1\"",
        "gwa q=2 a=\"4*h^2+2*h+1\"",
        "gwa q=1 h0=1 a=\"h^2-h\"",
        "gwa q=1/2 a=\"h^3+h\"",
        "gwa q=-3 h0=2/5 a=\"h^4 - 1/7*h^2 + 3\"",
        "gwa q=16 a=\"h^2 - 5*h + 6\"",
        "gwa q=2 h0=-1 a=\"(h-1)*(h-2)*(h-3)\"",
        "gwa q=5 a=\"7\" h0=0",
        "gwa q=3/2 a=\"h^5\"",
        "gwa q=2 a=\"h^2 + 1/2\"",
        "gwa q=1 h0=-2/3 a=\"h^2 - 1/9\"",
        "gwa q=4 a=\"h^6 - h^3\"",
        "lgwa q=2 a=\"h^-1 + h + h^2\"",
        "lgwa q=1/3 a=\"h^-2 - 5\"",
        "lgwa q=-2 a=\"3*h^-1\"",
        "lgwa q=2 a=\"(h-1)*(h-4)\"",
        "lgwa q=7 a=\"h^3 + h^-3\"",
        "smith q=2 f=\"h^2+h\"",
        "smith q=3 f=\"2*h^3 - h\"",
        "smith q=1/2 f=\"h\"",
        "smith q=-2 f=\"h^4 + 1/3*h^2\"",
        "smith q=5 f=\"7*h^2\"",
        "witten 2,1,2,1,1,3,4",
        "witten 1/2,0,3,-1,2,1,1",
        "witten -1,-2,-3,-4,-5,-6,-7",
        "witten 2,0,1,1,1,1,0",
        "lebruyn alpha=2 beta=3",
        "lebruyn alpha=-5 beta=1/2",
        "lebruyn alpha=3 beta=1",
        "lebruyn alpha=7/2 beta=-4",
        "lebruyn alpha=0 beta=0",
    };
    for (const char *text : corpus) {
        INFO(text);
        AlgebraSpec s1 = parse_algebra_spec(text);
        std::string printed = print_algebra_spec(s1);
        AlgebraSpec s2 = parse_algebra_spec(printed);
        REQUIRE(s1 == s2);
        REQUIRE(print_algebra_spec(s2) == printed);
    }
}

TEST_CASE("algebra specification rejections") {
    REQUIRE_THROWS_AS(parse_algebra_spec("weyl q=1"), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa a=\"h\""), parse_error);        // missing q
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=2"), parse_error);            // missing a
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=0 a=\"h\""), parse_error);    // q = 0
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=2 a=\"0\""), parse_error);    // a = 0
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=2 z=1 a=\"h\""), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("lgwa q=2 h0=1 a=\"h\""), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=2 a=\"h^-1\""), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("gwa q=2 a=\"h"), parse_error);      // unterminated
    REQUIRE_THROWS_AS(parse_algebra_spec("smith q=2 f=\"h+1\""), parse_error); // f(0) != 0
    REQUIRE_THROWS_AS(parse_algebra_spec("witten 1,2,3"), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("witten 1,2,3,4,5,6,x"), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("lebruyn alpha=2"), parse_error);
    REQUIRE_THROWS_AS(parse_algebra_spec("lebruyn alpha=1.5 beta=2"), parse_error);
}

TEST_CASE("presentation construction from specifications") {
    auto g = spec_to_presentation(parse_algebra_spec("gwa q=2 h0=1 a=\"h^2\""));
    REQUIRE(g.base == BaseRing::PolyRing);
    REQUIRE(g.q == 2);
    REQUIRE(g.h0 == 1);
    auto l = spec_to_presentation(parse_algebra_spec("lgwa q=3 a=\"h^-1+h\""));
    REQUIRE(l.base == BaseRing::LaurentRing);
    REQUIRE_THROWS_AS(spec_to_presentation(parse_algebra_spec("lebruyn alpha=2 beta=3")),
                      std::invalid_argument);
}

TEST_CASE("random input never crashes the parsers") {
    std::mt19937 rng(20260826);
    const std::string alphabet = "hxy0123456789+-*^()/= \"qaf";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    auto A = GwaPresentation::quantum(2, P({{2, 1}, {0, 1}}));
    int parsed_ok = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s;
        int n = len(rng);
        for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
        try {
            parse_element_expr(s, A);
            ++parsed_ok;
        } catch (const parse_error &) {
        } catch (const std::invalid_argument &) {
        }
        try {
            parse_algebra_spec(s);
        } catch (const parse_error &) {
        } catch (const std::invalid_argument &) {
        }
    }
    // Sanity: some random strings are valid expressions (e.g. bare digits).
    REQUIRE(parsed_ok > 0);
}
