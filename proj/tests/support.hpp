#pragma once

// Shared golden expansions and helpers for the test binaries. The golden
// polynomials are hand-transcribed from the published tables and must not be
// regenerated from the code under test.

#include <spinkerov/laurent.hpp>
#include <spinkerov/partitions.hpp>
#include <spinkerov/polynomial.hpp>

namespace spinkerov::testing {

inline Rational eval_at(const OddPolynomial& f, const StrictPartition& lambda) {
    std::map<int, Rational> values;
    int maxsub = std::max(1, f.degree());
    for (const auto& [sub, v] : power_sums(lambda, maxsub | 1)) values[sub] = v;
    return f.eval(values);
}

// phi(z - s; mu) = prod (z - s + b_i)/(z - s - a_i), normalized so every
// factor is a series in z^-1 with constant term 1.
inline RationalTail shifted_phi(const FrobeniusCoords& c, const Rational& s, int order) {
    RationalTail r = RationalTail::one(order);
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        RationalTail num(order), den(order);
        num.set_coefficient(0, 1);
        num.set_coefficient(1, c.b[i] - s);
        den.set_coefficient(0, 1);
        den.set_coefficient(1, -(c.a[i] + s));
        r = r * num * den.inverse();
    }
    return r;
}

inline OddPolynomial spin_character_golden(int k) {
    switch (k) {
        case 1:
            return poly_from_terms({{{{1, 1}}, "1"}});
        case 3:
            return poly_from_terms({{{{3, 1}}, "1"}, {{{1, 2}}, "-3"}, {{{1, 1}}, "2"}});
        case 5:
            return poly_from_terms({{{{5, 1}}, "1"},
                                    {{{3, 1}, {1, 1}}, "-10"},
                                    {{{3, 1}}, "55/3"},
                                    {{{1, 3}}, "50/3"},
                                    {{{1, 2}}, "-50"},
                                    {{{1, 1}}, "24"}});
        case 7:
            return poly_from_terms({{{{7, 1}}, "1"},
                                    {{{5, 1}, {1, 1}}, "-14"},
                                    {{{3, 2}}, "-7"},
                                    {{{5, 1}}, "77"},
                                    {{{3, 1}, {1, 2}}, "98"},
                                    {{{3, 1}, {1, 1}}, "-1862/3"},
                                    {{{1, 4}}, "-343/3"},
                                    {{{3, 1}}, "2128/3"},
                                    {{{1, 3}}, "2744/3"},
                                    {{{1, 2}}, "-1764"},
                                    {{{1, 1}}, "720"}});
        case 9:
            return poly_from_terms({{{{9, 1}}, "1"},
                                    {{{7, 1}, {1, 1}}, "-18"},
                                    {{{5, 1}, {3, 1}}, "-18"},
                                    {{{7, 1}}, "222"},
                                    {{{5, 1}, {1, 2}}, "162"},
                                    {{{3, 2}, {1, 1}}, "162"},
                                    {{{5, 1}, {1, 1}}, "-2538"},
                                    {{{3, 2}}, "-1026"},
                                    {{{3, 1}, {1, 3}}, "-972"},
                                    {{{5, 1}}, "37401/5"},
                                    {{{3, 1}, {1, 2}}, "14094"},
                                    {{{1, 5}}, "4374/5"},
                                    {{{3, 1}, {1, 1}}, "-52704"},
                                    {{{1, 4}}, "-14580"},
                                    {{{3, 1}}, "47492"},
                                    {{{1, 3}}, "70632"},
                                    {{{1, 2}}, "-109584"},
                                    {{{1, 1}}, "40320"}});
        default:
            throw std::invalid_argument("no golden for this k");
    }
}

inline OddPolynomial spin_cumulant_golden(int two_k) {
    switch (two_k) {
        case 2:
            return poly_from_terms({{{{1, 1}}, "1"}});
        case 4:
            return poly_from_terms({{{{3, 1}}, "1"}, {{{1, 2}}, "-3"}, {{{1, 1}}, "1"}});
        case 6:
            return poly_from_terms({{{{5, 1}}, "1"},
                                    {{{3, 1}, {1, 1}}, "-10"},
                                    {{{3, 1}}, "10/3"},
                                    {{{1, 3}}, "50/3"},
                                    {{{1, 2}}, "-15"},
                                    {{{1, 1}}, "1"}});
        case 8:
            return poly_from_terms({{{{7, 1}}, "1"},
                                    {{{5, 1}, {1, 1}}, "-14"},
                                    {{{3, 2}}, "-7"},
                                    {{{5, 1}}, "7"},
                                    {{{3, 1}, {1, 2}}, "98"},
                                    {{{3, 1}, {1, 1}}, "-266/3"},
                                    {{{1, 4}}, "-343/3"},
                                    {{{3, 1}}, "7"},
                                    {{{1, 3}}, "196"},
                                    {{{1, 2}}, "-35"},
                                    {{{1, 1}}, "1"}});
        case 10:
            return poly_from_terms({{{{9, 1}}, "1"},
                                    {{{7, 1}, {1, 1}}, "-18"},
                                    {{{5, 1}, {3, 1}}, "-18"},
                                    {{{7, 1}}, "12"},
                                    {{{5, 1}, {1, 2}}, "162"},
                                    {{{3, 2}, {1, 1}}, "162"},
                                    {{{5, 1}, {1, 1}}, "-198"},
                                    {{{3, 2}}, "-96"},
                                    {{{3, 1}, {1, 3}}, "-972"},
                                    {{{5, 1}}, "126/5"},
                                    {{{3, 1}, {1, 2}}, "1674"},
                                    {{{1, 5}}, "4374/5"},
                                    {{{3, 1}, {1, 1}}, "-330"},
                                    {{{1, 4}}, "-2430"},
                                    {{{3, 1}}, "12"},
                                    {{{1, 3}}, "810"},
                                    {{{1, 2}}, "-63"},
                                    {{{1, 1}}, "1"}});
        default:
            throw std::invalid_argument("no golden for this two_k");
    }
}

inline OddPolynomial symmetrized_cumulant_golden(int k) {
    switch (k) {
        case 2:
            return poly_from_terms({{{{1, 1}}, "1"}});
        case 4:
            return poly_from_terms({{{{3, 1}}, "1"}, {{{1, 2}}, "-3"}, {{{1, 1}}, "1/4"}});
        default:
            throw std::invalid_argument("no golden for this k");
    }
}

}  // namespace spinkerov::testing
