#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spinkerov/oracle.hpp>

using namespace spinkerov;

TEST_CASE("q-series") {
    auto q = oracle::q_polynomials(4);
    REQUIRE(q.size() == 5);
    CHECK(q[0] == OddPolynomial::constant(1));
    CHECK(q[1] == poly_from_terms({{{{1, 1}}, "2"}}));
    CHECK(q[2] == poly_from_terms({{{{1, 2}}, "2"}}));
    CHECK(q[3] == poly_from_terms({{{{1, 3}}, "4/3"}, {{{3, 1}}, "2/3"}}));
}

TEST_CASE("schur Q-functions") {
    CHECK(oracle::schur_q(StrictPartition({3})) ==
          poly_from_terms({{{{1, 3}}, "4/3"}, {{{3, 1}}, "2/3"}}));
    CHECK(oracle::schur_q(StrictPartition({2, 1})) ==
          poly_from_terms({{{{1, 3}}, "4/3"}, {{{3, 1}}, "-4/3"}}));

    SUBCASE("padding with a zero part is consistent") {
        // Odd length forces a zero part in the Pfaffian; the one-part case
        // must agree with the raw q-polynomial.
        auto q = oracle::q_polynomials(5);
        for (int a = 1; a <= 5; ++a)
            CHECK(oracle::schur_q(StrictPartition({a})) == q[std::size_t(a)]);
    }

    SUBCASE("homogeneity") {
        for (int n = 1; n <= 7; ++n)
            for (const StrictPartition& lam : enumerate_strict(n)) {
                OddPolynomial f = oracle::schur_q(lam);
                for (const auto& [e, c] : f.terms()) CHECK(monomial_degree(e) == n);
            }
    }
}

TEST_CASE("character tables") {
    SUBCASE("small goldens") {
        auto t2 = oracle::character_table(2);
        CHECK(t2.values.at({StrictPartition({2}), OddPartition({1, 1})}) == 1);
        CHECK(t2.dimensions.at(StrictPartition({2})) == 1);

        auto t3 = oracle::character_table(3);
        CHECK(t3.values.at({StrictPartition({3}), OddPartition({3})}) == 1);
        CHECK(t3.values.at({StrictPartition({2, 1}), OddPartition({3})}) == -2);
        CHECK(t3.dimensions.at(StrictPartition({3})) == 1);
        CHECK(t3.dimensions.at(StrictPartition({2, 1})) == 1);
    }

    SUBCASE("tables re-expand the power sums") {
        // p_rho = sum over strict lambda of z_rho^{-1} 2^{l(rho)} X^lambda_rho
        // inverts Q_lambda = sum_rho 2^{l(rho)} z_rho^{-1} X^lambda_rho p_rho.
        for (int n = 1; n <= 6; ++n) {
            auto table = oracle::character_table(n);
            for (const StrictPartition& lam : enumerate_strict(n)) {
                OddPolynomial expanded;
                for (const OddPartition& rho : enumerate_odd(n)) {
                    OddPolynomial prho = OddPolynomial::constant(1);
                    for (int part : rho.parts()) prho = prho * OddPolynomial::generator(part);
                    Rational coeff = make_rational(integer_pow(2, unsigned(rho.length())),
                                                   z_factor(rho.as_partition()));
                    expanded += prho * (coeff * Rational(table.values.at({lam, rho})));
                }
                CHECK(expanded == oracle::schur_q(lam));
            }
        }
    }

    SUBCASE("dimensions are positive") {
        for (int n = 1; n <= 7; ++n)
            for (const auto& [lam, g] : oracle::character_table(n).dimensions) CHECK(g > 0);
    }
}

TEST_CASE("normalized characters") {
    CHECK(oracle::normalized_character(OddPartition({3}), StrictPartition({2, 1})) == -12);
    CHECK(oracle::normalized_character(OddPartition({3}), StrictPartition({3})) == 6);
    CHECK(oracle::normalized_character(OddPartition({5}), StrictPartition({2, 1})) == 0);
    for (int n = 0; n <= 7; ++n)
        for (const StrictPartition& lam : enumerate_strict(n))
            CHECK(oracle::normalized_character(OddPartition({1}), lam) == n);
}
