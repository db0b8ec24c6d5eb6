#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinclif/parser.hpp"

using namespace spinclif;

namespace {

ElementQ e(int i) { return ElementQ::basis_vector(i, 3); }

}  // namespace

TEST_CASE("atoms and products") {
    CHECK(parse_expression("e1", 3) == promote(e(1)));
    CHECK(parse_expression("e1*e2", 3) == promote(e(1) * e(2)));
    CHECK(parse_expression("e1.e2", 3) == promote(e(1) * e(2)));  // dotted word form
    CHECK(parse_expression("2", 3) == promote(ElementQ::scalar(Rational(2), 3)));
    CHECK(parse_expression("3/4", 3) == promote(ElementQ::scalar(Rational(3, 4), 3)));
    CHECK(parse_expression("C", 3) == ElementC::scalar(CasimirPoly::symbol(), 3));
    CHECK(parse_expression("1/2*e1.e2 - 1/2*e2.e1", 3) ==
          promote(wedge(e(1), e(2))));
}

TEST_CASE("wedge operator and powers") {
    CHECK(parse_expression("e1^e2", 3) == promote(wedge(e(1), e(2))));
    CHECK(parse_expression("e1^e2^e3", 3) == promote(wedge(e(1), e(2), e(3))));
    CHECK(parse_expression("e1^e1", 3).is_zero());
    // C^2 is a power of the scalar symbol, not a wedge
    CHECK(parse_expression("C^2", 3) ==
          ElementC::scalar(CasimirPoly::monomial(2, Rational(1)), 3));
    CHECK(parse_expression("2^3", 3) == promote(ElementQ::scalar(Rational(8), 3)));
    // wedging a scalar scales the blade (0-blade convention)
    CHECK(parse_expression("e1^2", 3) == promote(Rational(2) * e(1)));
}

TEST_CASE("precedence") {
    // ^ binds tighter than *
    CHECK(parse_expression("e1^e2*e3", 3) == parse_expression("(e1^e2)*e3", 3));
    // * binds tighter than unary minus
    CHECK(parse_expression("-e1*e2", 3) == -parse_expression("e1*e2", 3));
    // products are left associative
    CHECK(parse_expression("e1*e2*e3", 3) == promote((e(1) * e(2)) * e(3)));
    // +/- lowest
    CHECK(parse_expression("e1 + e2*e3", 3) == promote(e(1) + e(2) * e(3)));
    CHECK(parse_expression("- e1 - e2", 3) == promote(-(e(1)) - e(2)));
}

TEST_CASE("generators in vector mode expand to bivectors") {
    CHECK(parse_expression("J3", 3) == promote(generator_bivector(3)));
    ElementQ casimir_image(3);
    for (int p = 1; p <= 3; ++p) {
        ElementQ jp = generator_bivector(p);
        casimir_image += jp * jp;
    }
    CHECK(parse_expression("J1*J1 + J2*J2 + J3*J3", 3) == promote(casimir_image));
}

TEST_CASE("generator mode") {
    ElementC x = parse_expression("J1.J2 - J3", 3, ParseMode::generators);
    ElementC expect(3);
    expect.add_term(Word{1, 2}, CasimirPoly(Rational(1)));
    expect.add_term(Word{3}, CasimirPoly(Rational(-1)));
    CHECK(x == expect);
    CHECK_THROWS_AS(parse_expression("e1", 3, ParseMode::generators), ParseError);
}

TEST_CASE("round trip on printed elements") {
    std::mt19937_64 rng(77);
    int total = 1000;
    for (int t = 0; t < total; ++t) {
        int dim = 1 + static_cast<int>(rng() % 5);
        ElementQ x(dim);
        int terms = static_cast<int>(rng() % 7);
        for (int i = 0; i < terms; ++i) {
            int len = static_cast<int>(rng() % 5);
            std::vector<uint8_t> w;
            for (int j = 0; j < len; ++j) w.push_back(1 + static_cast<uint8_t>(rng() % dim));
            long num = static_cast<long>(rng() % 19) - 9;
            x.add_term(Word(std::move(w)), Rational(num, 1 + static_cast<long>(rng() % 7)));
        }
        CHECK(parse_expression(x.str(), dim) == promote(x));
    }
}

TEST_CASE("round trip on casimir polynomials") {
    std::mt19937_64 rng(78);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> coef;
        int deg = static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i)
            coef.push_back(Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5)));
        CasimirPoly p = CasimirPoly::from_coefficients(coef);
        CHECK(parse_casimir_poly(p.str()) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expression("e1 + + e2", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.position() == 5);
    }
    CHECK_THROWS_AS(parse_expression("e1 *", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("(e1", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("e", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("x1", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("e4", 3), ParseError);   // out of range for dim 3
    CHECK_THROWS_AS(parse_expression("J4", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("", 3), ParseError);
    CHECK_THROWS_AS(parse_expression("e1 e2", 3), ParseError);  // missing operator
}

TEST_CASE("narrowing to rational elements") {
    CHECK(to_rational_element(parse_expression("e1 + 2*e2", 3)) == e(1) + Rational(2) * e(2));
    CHECK_THROWS_AS(to_rational_element(parse_expression("C*e1", 3)), std::invalid_argument);
}
