#pragma once

#include <spinkerov/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace spinkerov {

// Exponent vector of a monomial in the odd power sums:
// index j corresponds to the generator p_{2j+1}.
using Exponents = std::vector<unsigned>;

inline int monomial_degree(const Exponents& e) {
    long d = 0;
    for (std::size_t j = 0; j < e.size(); ++j) d += long(2 * j + 1) * e[j];
    return int(d);
}

// Graded order: compare weighted degree first, ties broken by lexicographic
// comparison of exponent vectors from the smallest subscript.
struct MonomialLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t j = 0; j < n; ++j) {
            unsigned ea = j < a.size() ? a[j] : 0;
            unsigned eb = j < b.size() ? b[j] : 0;
            if (ea != eb) return ea < eb;
        }
        return false;
    }
};

class MissingGeneratorError : public std::runtime_error {
public:
    explicit MissingGeneratorError(int subscript)
        : std::runtime_error("no value supplied for generator p_" + std::to_string(subscript)),
          subscript_(subscript) {}
    int subscript() const { return subscript_; }

private:
    int subscript_;
};

// Element of the algebra generated by p_1, p_3, p_5, ... over the rationals,
// graded by deg p_{2j-1} = 2j-1. Zero coefficients are never stored.
class OddPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, MonomialLess>;

    OddPolynomial() = default;

    static OddPolynomial constant(const Rational& c);
    static OddPolynomial generator(int subscript);  // p_subscript, subscript odd

    bool is_zero() const { return terms_.empty(); }
    // Grading degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.rbegin()->first); }

    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    OddPolynomial operator-() const;
    OddPolynomial& operator+=(const OddPolynomial& o);
    OddPolynomial& operator-=(const OddPolynomial& o);
    OddPolynomial& operator*=(const Rational& c);
    friend OddPolynomial operator+(OddPolynomial a, const OddPolynomial& b) { return a += b; }
    friend OddPolynomial operator-(OddPolynomial a, const OddPolynomial& b) { return a -= b; }
    friend OddPolynomial operator*(const OddPolynomial& a, const OddPolynomial& b);
    friend OddPolynomial operator*(OddPolynomial a, const Rational& c) { return a *= c; }
    friend OddPolynomial operator*(const Rational& c, OddPolynomial a) { return a *= c; }
    bool operator==(const OddPolynomial& o) const { return terms_ == o.terms_; }

    OddPolynomial pow(unsigned e) const;

    // Drops all monomials of grading degree > maxDegree.
    OddPolynomial truncated(int max_degree) const;

    // Substitutes values keyed by odd subscript; throws MissingGeneratorError
    // when a generator appearing in the polynomial has no value.
    Rational eval(const std::map<int, Rational>& values) const;

    // All terms of maximal grading degree.
    std::vector<std::pair<Exponents, Rational>> leading_terms() const;

    // Human-readable rendering, degree-descending, e.g. "p3 - 3 p1^2 + 2 p1".
    std::string to_string() const;

private:
    TermMap terms_;
};

// Multiplication with degree truncation applied to the result (cap < 0: none).
OddPolynomial mul_capped(const OddPolynomial& a, const OddPolynomial& b, int cap);

// Test/construction helper: terms given as (subscript -> exponent, coefficient string).
OddPolynomial poly_from_terms(
    const std::vector<std::pair<std::map<int, unsigned>, std::string>>& terms);

}  // namespace spinkerov
