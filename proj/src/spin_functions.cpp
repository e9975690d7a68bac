#include <spinkerov/spin_functions.hpp>

namespace spinkerov {

PhiLogData<OddPolynomial> symbolic_phi_log(int max_index) {
    PhiLogData<OddPolynomial> d;
    for (int j = 0; j < max_index; ++j) {
        int sub = 2 * j + 1;
        d.entries.push_back(OddPolynomial::generator(sub) * Rational(2, sub));
    }
    return d;
}

PhiLogData<Rational> numeric_phi_log(const StrictPartition& lambda, int max_index) {
    PhiLogData<Rational> d;
    std::map<int, Rational> ps = power_sums(lambda, 2 * max_index - 1);
    for (int j = 0; j < max_index; ++j) {
        int sub = 2 * j + 1;
        d.entries.push_back(ps.at(sub) * Rational(2, sub));
    }
    return d;
}

template <class R>
LaurentTail<R> phi_ratio_series(const Rational& num_shift, const Rational& den_shift, int power,
                                int order, const PhiLogData<R>& data, int degree_cap) {
    // Every odd subscript <= order contributes; there are (order+1)/2 of them.
    if (int(data.entries.size()) < (order + 1) / 2)
        throw std::invalid_argument("phi log data covers subscripts up to " +
                                    std::to_string(data.max_subscript()) +
                                    "; order " + std::to_string(order) + " requires more");
    LaurentTail<R> t(order, degree_cap);
    if (power != 0 && num_shift != den_shift) {
        for (std::size_t j = 0; j < data.entries.size(); ++j) {
            int m = 2 * int(j) + 1;
            if (m > order) break;
            RationalTail diff = expand_shifted_inverse_power(m, num_shift, order) -
                                expand_shifted_inverse_power(m, den_shift, order);
            if constexpr (std::same_as<R, Rational>) {
                diff.scale(data.entries[j]);
                t += diff;
            } else {
                t += scaled_embed(diff, data.entries[j], degree_cap);
            }
        }
        t.scale_rational(Rational(power));
    }
    return t.exp();
}

template LaurentTail<Rational> phi_ratio_series(const Rational&, const Rational&, int, int,
                                                const PhiLogData<Rational>&, int);
template LaurentTail<OddPolynomial> phi_ratio_series(const Rational&, const Rational&, int, int,
                                                     const PhiLogData<OddPolynomial>&, int);

namespace {

// Coefficients of (-1/(4k)) (2z - k) prod_{j=1}^{k-1} (z - j) as a tail with
// polynomial part up to z^k, sharing the given truncation order and cap.
template <class R>
LaurentTail<R> character_prefactor(int k, int order, int cap) {
    std::vector<Rational> coeffs{Rational(-k), Rational(2)};  // 2z - k
    for (int j = 1; j <= k - 1; ++j) {
        std::vector<Rational> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= Rational(j) * coeffs[i];
        }
        coeffs = std::move(next);
    }
    LaurentTail<R> t(order, cap);
    const Rational scale(-1, 4 * k);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        Rational c = coeffs[d] * scale;
        if (c == 0) continue;
        if constexpr (std::same_as<R, Rational>) {
            t.set_coefficient(-int(d), c);
        } else {
            t.set_coefficient(-int(d), OddPolynomial::constant(c));
        }
    }
    return t;
}

template <class R>
R spin_character_extract(int k, const PhiLogData<R>& data, int cap) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("spin character subscript must be odd and positive");
    const int order = k + 2;  // prefactor degree k, extraction at z^-1, one guard
    LaurentTail<R> ratio = phi_ratio_series<R>(0, Rational(k), 1, order, data, cap);
    LaurentTail<R> prod = character_prefactor<R>(k, order, cap) * ratio;
    return prod.coefficient(1);
}

int phi_entries_for_order(int order) { return (order + 1) / 2; }

}  // namespace

OddPolynomial spin_character_poly(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("spin character subscript must be odd and positive");
    // The result has grading degree k; intermediate truncation at that degree
    // is lossless because degrees only add under multiplication.
    auto data = symbolic_phi_log(phi_entries_for_order(k + 2));
    return spin_character_extract<OddPolynomial>(k, data, k);
}

OddPolynomial spin_free_cumulant_poly(int two_k) {
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("spin free cumulant subscript must be even and positive");
    const int order = two_k + 1;  // extraction at z^{-2k} plus one guard
    const int cap = two_k - 1;
    auto data = symbolic_phi_log(phi_entries_for_order(order));
    PolynomialTail ratio = phi_ratio_series<OddPolynomial>(0, 1, two_k - 1, order, data, cap);
    OddPolynomial c = ratio.coefficient(two_k);
    return c * Rational(-1, 2 * (two_k - 1));
}

OddPolynomial symmetrized_cumulant_poly(int k) {
    if (k < 2) throw std::invalid_argument("symmetrized cumulant subscript must be >= 2");
    const int order = k + 1;
    const int cap = k - 1;
    auto data = symbolic_phi_log(phi_entries_for_order(order));
    PolynomialTail ratio = phi_ratio_series<OddPolynomial>(Rational(-1, 2), Rational(1, 2),
                                                           k - 1, order, data, cap);
    OddPolynomial c = ratio.coefficient(k);
    return c * Rational(-1, 2 * (k - 1));
}

OddPolynomial super_power_sum_double_poly(int n) {
    if (n < 1) throw std::invalid_argument("super power sum index must be >= 1");
    OddPolynomial out;
    for (int j = 0; 2 * j + 1 <= n; ++j) {
        // binom(n, 2j+1) / 2^{n-2j-2}; the exponent may be -1 (factor 2).
        Rational c = Rational(binomial(unsigned(n), unsigned(2 * j + 1)));
        int e = n - 2 * j - 2;
        if (e >= 0)
            c /= Rational(integer_pow(2, unsigned(e)));
        else
            c *= 2;
        out += OddPolynomial::generator(2 * j + 1) * c;
    }
    return out;
}

Rational spin_character_eval_direct(int k, const StrictPartition& lambda) {
    auto data = numeric_phi_log(lambda, phi_entries_for_order(k + 2));
    return spin_character_extract<Rational>(k, data, -1);
}

Rational spin_character_eval(int k, const StrictPartition& lambda) {
    return spin_character_poly(k).eval(power_sums(lambda, std::max(k, 1)));
}

Rational spin_free_cumulant_eval(int two_k, const StrictPartition& lambda) {
    return spin_free_cumulant_poly(two_k).eval(power_sums(lambda, two_k - 1));
}

Rational symmetrized_cumulant_eval(int k, const StrictPartition& lambda) {
    OddPolynomial p = symmetrized_cumulant_poly(k);
    int max_sub = k % 2 == 0 ? k - 1 : 1;
    return p.eval(power_sums(lambda, max_sub));
}

}  // namespace spinkerov
