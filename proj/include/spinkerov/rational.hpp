#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spinkerov {

// Arbitrary-precision integers and rationals, backed by GMP.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// through arithmetic; only raw constructions need an explicit canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "num/den" (or "num" when den = 1).
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("unparseable rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// n (n-1) ... (n-k+1)
inline Integer falling_factorial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Integer(n - i);
    return r;
}

}  // namespace spinkerov
