#pragma once

#include <spinkerov/partitions.hpp>
#include <spinkerov/polynomial.hpp>

#include <map>
#include <string>
#include <vector>

namespace spinkerov {

enum class CumulantFamily { Ordinary, Spin, Symmetrized };

// Exponent vector over cumulant-generator subscripts (R_j, frak R_2j, or
// the symmetrized T_2j), keyed by subscript.
using GeneratorMonomial = std::map<int, unsigned>;

// deg R_j = j; deg of the spin/symmetrized generator with subscript 2k is 2k-1.
int generator_monomial_degree(const GeneratorMonomial& m, CumulantFamily family);
// Weight = sum of subscripts; used for display ordering.
int generator_monomial_weight(const GeneratorMonomial& m);

struct KerovPolynomial {
    CumulantFamily family = CumulantFamily::Spin;
    std::map<GeneratorMonomial, Rational> terms;

    bool operator==(const KerovPolynomial& o) const = default;
};

// Triangular cumulant-generator family: subscript 2k pairs with an element of
// the odd power-sum algebra whose leading term is exactly p_{2k-1}.
struct BasisFamily {
    CumulantFamily family;
    std::vector<std::pair<int, OddPolynomial>> generators;  // ordered by subscript
};

BasisFamily spin_basis(int max_subscript);
BasisFamily symmetrized_basis(int max_subscript);

// Triangular elimination: peel the top graded layer of f, map each top
// p-monomial to the generator monomial with each subscript bumped by one, and
// subtract; the expansion of the result through the basis reproduces f.
KerovPolynomial express_in_basis(const OddPolynomial& f, const BasisFamily& basis);

// Expands a generator polynomial back into the odd power-sum algebra.
OddPolynomial expand_through_basis(const KerovPolynomial& kp, const BasisFamily& basis);

KerovPolynomial spin_kerov(int k);
KerovPolynomial symmetrized_spin_kerov(int k);

// Murnaghan-Nakayama border-strip recursion; requires |lambda| = |nu|.
Integer mn_character(const Partition& lambda, const Partition& nu);

// Ch_k(lambda) = n(n-1)...(n-k+1) chi^lambda_{(k) u (1^{n-k})} / f^lambda.
Rational ordinary_character_eval(int k, const Partition& lambda);

// Evaluation/interpolation over expanding partition pools with an exact
// linear solve and held-out verification.
KerovPolynomial ordinary_kerov(int k);

struct PositivityRecord {
    int k = 0;
    bool all_nonnegative = true;
    bool all_integers = true;
    std::vector<std::pair<GeneratorMonomial, Rational>> offending;
};

std::vector<PositivityRecord> positivity_report(int max_k, CumulantFamily family);

struct ComparisonReport {
    int k = 0;
    struct LinearMatch {
        int subscript;
        Rational ordinary;
        Rational spin;
        bool match;
    };
    std::vector<LinearMatch> linear_matches;
    struct TopDegreeRatio {
        GeneratorMonomial monomial;  // even subscripts, weight k-1
        Rational spin;
        Rational ordinary;
        Rational predicted_factor;  // 2^{s_2 + s_4 + ... - 1}
        bool ratio_match;           // spin == predicted * ordinary
    };
    std::vector<TopDegreeRatio> top_degree_ratios;
};

ComparisonReport coincidence_report(int k);

// Reference expansions for the regression range (k <= 9, verified by hand
// against the published tables); used by `check` and the golden tests.
const std::map<int, KerovPolynomial>& known_spin_kerov();
const std::map<int, KerovPolynomial>& known_ordinary_kerov();

// Construction helper mirroring poly_from_terms.
KerovPolynomial kerov_from_terms(
    CumulantFamily family,
    const std::vector<std::pair<GeneratorMonomial, std::string>>& terms);

}  // namespace spinkerov
