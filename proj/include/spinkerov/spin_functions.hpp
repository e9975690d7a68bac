#pragma once

#include <spinkerov/laurent.hpp>
#include <spinkerov/partitions.hpp>
#include <spinkerov/polynomial.hpp>

namespace spinkerov {

// Coefficients of log Phi(z; lambda) = sum_j e_j z^{-(2j-1)} with
// e_j = 2 p_{2j-1} / (2j-1), carried either symbolically or evaluated at a
// strict partition.
template <class R>
struct PhiLogData {
    std::vector<R> entries;  // entries[j] belongs to (z - s)^{-(2j+1)}

    int max_subscript() const { return 2 * int(entries.size()) - 1; }
};

PhiLogData<OddPolynomial> symbolic_phi_log(int max_index);
PhiLogData<Rational> numeric_phi_log(const StrictPartition& lambda, int max_index);

// (Phi(z - s1; .) / Phi(z - s2; .))^power as a truncated tail with constant
// term 1, expanded through z^{-order}. Shifts are handled by re-expanding each
// (z - s)^{-(2j-1)}; requires the data to cover every odd subscript <= order.
template <class R>
LaurentTail<R> phi_ratio_series(const Rational& num_shift, const Rational& den_shift, int power,
                                int order, const PhiLogData<R>& data, int degree_cap = -1);

// Spin character p-expansion via the one-row coefficient-extraction formula:
// [z^-1] of (-1/(4k)) (2z - k) prod_{j=1}^{k-1} (z - j) * Phi(z)/Phi(z - k).
OddPolynomial spin_character_poly(int k);

// Spin free cumulant: -(1/(2(2k-1))) [z^{-2k}] (Phi(z)/Phi(z-1))^{2k-1}.
OddPolynomial spin_free_cumulant_poly(int two_k);

// Symmetrized-double cumulant:
// -(1/(2(k-1))) [z^{-k}] (Phi(z+1/2)/Phi(z-1/2))^{k-1}; zero for odd k.
OddPolynomial symmetrized_cumulant_poly(int k);

// p_n^super of the double diagram as an element of the odd power-sum algebra:
// sum_j binom(n, 2j+1) 2^{-(n-2j-2)} p_{2j+1}.
OddPolynomial super_power_sum_double_poly(int n);

// Numeric evaluation of the spin character at a strict partition; runs the
// extraction formula with rational coefficients (no symbolic step).
Rational spin_character_eval_direct(int k, const StrictPartition& lambda);

// Evaluation through the symbolic expansion; the two paths are checked
// against each other in the test suites.
Rational spin_character_eval(int k, const StrictPartition& lambda);

Rational spin_free_cumulant_eval(int two_k, const StrictPartition& lambda);
Rational symmetrized_cumulant_eval(int k, const StrictPartition& lambda);

}  // namespace spinkerov
