#pragma once

#include <spinkerov/laurent.hpp>
#include <spinkerov/partitions.hpp>
#include <spinkerov/rational.hpp>

#include <vector>

namespace spinkerov {

// Finitely supported signed measure: transition measures carry positive
// weights summing to 1, Rayleigh measures carry +-1 weights summing to 1.
struct AtomicMeasure {
    std::vector<std::pair<Rational, Rational>> atoms;  // (location, weight)

    Rational total_mass() const;
    Rational moment(int k) const;  // sum w * x^k
};

// tau_lambda = sum of delta_x over minima minus delta_y over maxima.
AtomicMeasure rayleigh_measure(const Partition& mu);

// M_k[tau], k = 1..N.
std::vector<Rational> rayleigh_moments(const Partition& mu, int n);

// M_n[m] = sum over nu |- n of z_nu^{-1} prod M_{nu_i}[tau].
std::vector<Rational> transition_moments(const Partition& mu, int n);

// Free moment <-> cumulant conversion; sequences are 1-based (values[i-1] = X_i).
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments);
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants);

// z G_m(z) for the transition measure of mu, as a tail with constant term 1,
// built from the interlacing coordinates.
RationalTail transition_zg_series(const Partition& mu, int order);

// R_k of a measure whose Cauchy transform is z^{-1} H(z), given H = zG with
// constant term 1: R_k = -(1/(k-1)) [z^{-k}] H^{-(k-1)}.
Rational free_cumulant_from_zg(const RationalTail& zg, int k);

// R_k(mu) via coefficient extraction from G^{-(k-1)}, k >= 2.
Rational biane_cumulant(const Partition& mu, int k);

// p_k^super = sum (a_i^k + (-1)^{k-1} b_i^k).
Rational super_power_sum(const FrobeniusCoords& c, int k);

// M_n[tau] = sum_j binom(n, 2j+1) 2^{-2j} p^super_{n-2j-1}, n >= 2.
Rational rayleigh_from_super(const FrobeniusCoords& c, int n);

// phi(z; lambda) = prod (z + b_i)/(z - a_i) as a tail with constant term 1.
RationalTail phi_series(const FrobeniusCoords& c, int order);

}  // namespace spinkerov
