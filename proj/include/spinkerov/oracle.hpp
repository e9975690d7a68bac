#pragma once

#include <spinkerov/partitions.hpp>
#include <spinkerov/polynomial.hpp>

#include <map>
#include <vector>

namespace spinkerov {
namespace oracle {

// q_0, ..., q_maxR from the generating function
// sum_r q_r t^r = exp(2 sum_{odd k} p_k t^k / k); q_r is homogeneous of degree r.
std::vector<OddPolynomial> q_polynomials(int max_r);

// Schur Q-function in the odd power-sum basis; Pfaffian of the two-row values,
// padded with a zero part when the length is odd.
OddPolynomial schur_q(const StrictPartition& lambda);

struct SpinCharacterTable {
    int n = 0;
    // X^lambda_rho, integers, keyed by (strict lambda, odd rho), |both| = n.
    std::map<std::pair<StrictPartition, OddPartition>, Integer> values;
    // g^lambda = X^lambda_{(1^n)}
    std::map<StrictPartition, Integer> dimensions;
};

// Expands each p_rho in the P-basis (P_lambda = 2^{-l} Q_lambda) by an exact
// linear solve in the degree-n homogeneous component.
SpinCharacterTable character_table(int n);

// Normalized spin character from table lookups:
// n(n-1)...(n-k+1) X^lambda_{rho u (1^{n-k})} / g^lambda, zero when |rho| > |lambda|.
Rational normalized_character(const OddPartition& rho, const StrictPartition& lambda);

}  // namespace oracle
}  // namespace spinkerov
