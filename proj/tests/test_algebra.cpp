#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spinkerov/laurent.hpp>
#include <spinkerov/polynomial.hpp>
#include <spinkerov/rational.hpp>

using namespace spinkerov;

namespace {

bool tails_equal(const RationalTail& a, const RationalTail& b) {
    int order = std::min(a.truncation_order(), b.truncation_order());
    int lo = std::min(a.leading_exponent(), b.leading_exponent());
    for (int n = lo; n <= order; ++n)
        if (a.coefficient(n) != b.coefficient(n)) return false;
    return true;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational("-55/3")) == "-55/3");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(is_integer(parse_rational("8/4")));
    CHECK_FALSE(is_integer(parse_rational("1/2")));
}

TEST_CASE("integer helpers") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(falling_factorial(6, 3) == 120);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(integer_pow(2, 10) == 1024);
    CHECK(rational_pow(make_rational(1, 2), 3) == make_rational(1, 8));
}

TEST_CASE("odd power-sum polynomial arithmetic") {
    OddPolynomial p1 = OddPolynomial::generator(1);
    OddPolynomial p3 = OddPolynomial::generator(3);
    OddPolynomial f = p3 - Rational(3) * p1 * p1 + Rational(2) * p1;

    CHECK(f.degree() == 3);
    CHECK(f.to_string() == "p3 - 3 p1^2 + 2 p1");

    SUBCASE("product expansion by hand") {
        OddPolynomial expected = poly_from_terms({
            {{{3, 1}, {1, 1}}, "1"},
            {{{1, 3}}, "-3"},
            {{{1, 2}}, "2"},
        });
        CHECK(f * p1 == expected);
    }

    SUBCASE("grading is multiplicative") {
        OddPolynomial g = p1 * p1 + Rational(5) * p3;
        CHECK((f * g).degree() == f.degree() + g.degree());
        CHECK((f.pow(3)).degree() == 9);
    }

    SUBCASE("pow matches repeated multiplication") {
        CHECK(f.pow(4) == f * f * f * f);
        CHECK(f.pow(0) == OddPolynomial::constant(1));
    }

    SUBCASE("truncation drops high degrees only") {
        OddPolynomial t = (f * f).truncated(3);
        for (const auto& [e, c] : t.terms()) CHECK(monomial_degree(e) <= 3);
        CHECK((f * f).truncated(6) == f * f);
        CHECK(mul_capped(f, f, 3) == t);
        CHECK(mul_capped(f, f, -1) == f * f);
    }

    SUBCASE("evaluation is a ring homomorphism") {
        std::map<int, Rational> v{{1, 3}, {3, 9}, {5, make_rational(-2, 7)}};
        OddPolynomial g = OddPolynomial::generator(5) * p1 - Rational(4) * p3;
        CHECK((f * g).eval(v) == f.eval(v) * g.eval(v));
        CHECK((f + g).eval(v) == f.eval(v) + g.eval(v));
        CHECK(f.eval({{1, 3}, {3, 9}}) == -12);
        CHECK(f.eval({{1, 2}, {3, 8}}) == 0);
        CHECK_THROWS_AS(g.eval({{1, 1}, {3, 1}}), MissingGeneratorError);
    }
}

TEST_CASE("laurent tail basics") {
    // t = 1 + 2 z^-1 - z^-3
    RationalTail t(6);
    t.set_coefficient(0, 1);
    t.set_coefficient(1, 2);
    t.set_coefficient(3, -1);

    SUBCASE("coefficient access guards the truncation order") {
        CHECK(t.coefficient(3) == -1);
        CHECK(t.coefficient(5) == 0);
        CHECK_THROWS_AS(t.coefficient(7), std::out_of_range);
        CHECK_THROWS_AS(t.truncated_to(8), std::invalid_argument);
    }

    SUBCASE("mismatched orders are rejected") {
        RationalTail other(4);
        other.set_coefficient(0, 1);
        CHECK_THROWS_AS(t + other, std::invalid_argument);
    }

    SUBCASE("inverse really inverts") {
        RationalTail prod = t * t.inverse();
        CHECK(prod.coefficient(0) == 1);
        for (int n = 1; n <= prod.truncation_order(); ++n) CHECK(prod.coefficient(n) == 0);
    }

    SUBCASE("pow matches repeated multiplication") {
        RationalTail sq = (t * t).truncated_to(6);
        CHECK(tails_equal(t.pow(2), sq));
        CHECK(tails_equal(t.pow(5), (sq * sq * t).truncated_to(6)));
    }

    SUBCASE("multiplying by a polynomial part shrinks the reliable order") {
        // z - 2, lead exponent -1
        RationalTail lin(6);
        lin.set_coefficient(-1, 1);
        lin.set_coefficient(0, -2);
        RationalTail prod = lin * t;
        CHECK(prod.truncation_order() == 5);
        CHECK(prod.coefficient(-1) == 1);  // z
        CHECK(prod.coefficient(0) == 0);   // 2 - 2
        CHECK(prod.coefficient(1) == -4);
    }
}

TEST_CASE("shifted inverse power expansion") {
    const Rational c = make_rational(3, 2);
    const int order = 10;
    for (int m = 1; m <= 4; ++m) {
        RationalTail expansion = expand_shifted_inverse_power(m, c, order);
        // Multiply back by (z - c)^m; each factor shrinks the reliable order,
        // so it is rebuilt at the running order.
        RationalTail back = expansion;
        for (int i = 0; i < m; ++i) {
            RationalTail lin(back.truncation_order());
            lin.set_coefficient(-1, 1);
            lin.set_coefficient(0, -c);
            back = back * lin;
        }
        CHECK(back.coefficient(0) == 1);
        for (int n = 1; n <= back.truncation_order(); ++n) CHECK(back.coefficient(n) == 0);
    }
    CHECK_THROWS_AS(expand_shifted_inverse_power(0, c, order), std::invalid_argument);
}

TEST_CASE("formal exponential") {
    RationalTail s(8), u(8);
    s.set_coefficient(1, 2);
    s.set_coefficient(3, -1);
    u.set_coefficient(2, make_rational(1, 3));

    SUBCASE("exp is a homomorphism from addition to multiplication") {
        CHECK(tails_equal((s + u).exp(), (s.exp() * u.exp()).truncated_to(8)));
    }

    SUBCASE("exp requires a vanishing constant term") {
        RationalTail bad(8);
        bad.set_coefficient(0, 1);
        CHECK_THROWS_AS(bad.exp(), std::domain_error);
    }
}

TEST_CASE("polynomial-coefficient tails") {
    OddPolynomial p1 = OddPolynomial::generator(1);

    SUBCASE("exp(2 p1 / z) through z^-2") {
        PolynomialTail t(2);
        t.set_coefficient(1, Rational(2) * p1);
        PolynomialTail e = t.exp();
        CHECK(e.coefficient(0) == OddPolynomial::constant(1));
        CHECK(e.coefficient(1) == Rational(2) * p1);
        CHECK(e.coefficient(2) == Rational(2) * p1 * p1);
    }

    SUBCASE("degree cap prunes coefficients") {
        PolynomialTail t(4, 2);
        t.set_coefficient(1, Rational(2) * p1);
        PolynomialTail e = t.exp();
        CHECK(e.coefficient(3).degree() <= 2);
        CHECK(e.coefficient(2) == Rational(2) * p1 * p1);
    }
}
