#include <spinkerov/kerov.hpp>

#include <spinkerov/linalg.hpp>
#include <spinkerov/measures.hpp>
#include <spinkerov/spin_functions.hpp>

#include <algorithm>
#include <mutex>

namespace spinkerov {

int generator_monomial_degree(const GeneratorMonomial& m, CumulantFamily family) {
    int d = 0;
    for (const auto& [sub, e] : m)
        d += (family == CumulantFamily::Ordinary ? sub : sub - 1) * int(e);
    return d;
}

int generator_monomial_weight(const GeneratorMonomial& m) {
    int w = 0;
    for (const auto& [sub, e] : m) w += sub * int(e);
    return w;
}

BasisFamily spin_basis(int max_subscript) {
    BasisFamily b{CumulantFamily::Spin, {}};
    for (int s = 2; s <= max_subscript; s += 2)
        b.generators.emplace_back(s, spin_free_cumulant_poly(s));
    return b;
}

BasisFamily symmetrized_basis(int max_subscript) {
    BasisFamily b{CumulantFamily::Symmetrized, {}};
    for (int s = 2; s <= max_subscript; s += 2)
        b.generators.emplace_back(s, symmetrized_cumulant_poly(s));
    return b;
}

namespace {

const OddPolynomial& find_generator(const BasisFamily& basis, int subscript) {
    for (const auto& [s, p] : basis.generators)
        if (s == subscript) return p;
    throw MissingGeneratorError(subscript);
}

}  // namespace

OddPolynomial expand_through_basis(const KerovPolynomial& kp, const BasisFamily& basis) {
    OddPolynomial out;
    for (const auto& [mono, coeff] : kp.terms) {
        OddPolynomial prod = OddPolynomial::constant(coeff);
        for (const auto& [sub, e] : mono) prod = prod * find_generator(basis, sub).pow(e);
        out += prod;
    }
    return out;
}

KerovPolynomial express_in_basis(const OddPolynomial& f, const BasisFamily& basis) {
    KerovPolynomial result;
    result.family = basis.family;
    OddPolynomial rest = f;
    while (!rest.is_zero()) {
        if (rest.degree() < 1)
            throw std::runtime_error("nonzero constant residue in triangular elimination");
        for (const auto& [e, c] : rest.leading_terms()) {
            GeneratorMonomial mono;
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0) mono[2 * int(j) + 2] = e[j];
            result.terms[mono] += c;
        }
        // Subtract the recorded combination; leading terms cancel by
        // triangularity, so the top degree strictly drops.
        OddPolynomial expanded = expand_through_basis(result, basis);
        OddPolynomial next = f - expanded;
        if (!next.is_zero() && next.degree() >= rest.degree())
            throw std::runtime_error("triangular elimination failed to reduce degree");
        rest = std::move(next);
    }
    std::erase_if(result.terms, [](const auto& kv) { return kv.second == 0; });
    if (!(expand_through_basis(result, basis) == f))
        throw std::runtime_error("basis expansion does not reproduce the input");
    return result;
}

KerovPolynomial spin_kerov(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("spin Kerov index must be odd and positive");
    return express_in_basis(spin_character_poly(k), spin_basis(k + 1));
}

KerovPolynomial symmetrized_spin_kerov(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("spin Kerov index must be odd and positive");
    return express_in_basis(spin_character_poly(k), symmetrized_basis(k + 1));
}

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing beta numbers

struct MnKey {
    Parts lambda;
    Parts nu;
    auto operator<=>(const MnKey&) const = default;
};

Integer mn_rec(const Parts& lambda, const Parts& nu, std::map<MnKey, Integer>& memo);

// All ways to remove a border strip of size t, via beta numbers: pick beta_i
// with beta_i - t >= 0 not already in the set; the sign is (-1)^{number of
// beta values strictly between}.
Integer mn_strip_sum(const Parts& lambda, int t, const Parts& rest,
                     std::map<MnKey, Integer>& memo) {
    const int len = int(lambda.size());
    BetaSet beta(lambda.begin(), lambda.end());
    for (int i = 0; i < len; ++i) beta[std::size_t(i)] += len - 1 - i;
    Integer total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[std::size_t(i)] - t;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[std::size_t(j)] == target) occupied = true;
            if (beta[std::size_t(j)] > target && beta[std::size_t(j)] < beta[std::size_t(i)])
                ++between;
        }
        if (occupied) continue;
        BetaSet nb = beta;
        nb[std::size_t(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        Parts np;
        for (int j = 0; j < len; ++j) {
            int part = nb[std::size_t(j)] - (len - 1 - j);
            if (part > 0) np.push_back(part);
        }
        Integer sub = mn_rec(np, rest, memo);
        if (between % 2 == 1)
            total -= sub;
        else
            total += sub;
    }
    return total;
}

Integer mn_rec(const Parts& lambda, const Parts& nu, std::map<MnKey, Integer>& memo) {
    if (nu.empty()) return lambda.empty() ? 1 : 0;
    MnKey key{lambda, nu};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Parts rest(nu.begin() + 1, nu.end());
    Integer v = mn_strip_sum(lambda, nu[0], rest, memo);
    memo.emplace(std::move(key), v);
    return v;
}

std::map<MnKey, Integer>& mn_memo() {
    static std::map<MnKey, Integer> memo;
    return memo;
}
std::mutex mn_mutex;

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("character: |lambda| and |nu| must agree");
    std::lock_guard<std::mutex> lock(mn_mutex);
    return mn_rec(lambda.parts(), nu.parts(), mn_memo());
}

Rational ordinary_character_eval(int k, const Partition& lambda) {
    if (k < 1) throw std::invalid_argument("character subscript must be >= 1");
    const int n = lambda.size();
    if (k > n) return 0;
    Parts nu{k};
    nu.insert(nu.end(), std::size_t(n - k), 1);
    std::sort(nu.rbegin(), nu.rend());
    Integer chi = mn_character(lambda, Partition(nu));
    Integer dim = mn_character(lambda, Partition(Parts(std::size_t(n), 1)));
    return Rational(falling_factorial(unsigned(n), unsigned(k))) * Rational(chi) / Rational(dim);
}

namespace {

// Monomials in R_2..R_maxSub of grading degree <= maxDeg (deg R_j = j),
// including the empty monomial.
void candidate_monomials_rec(int max_sub, int sub, int max_deg, GeneratorMonomial& acc,
                             std::vector<GeneratorMonomial>& out) {
    if (sub > max_sub) {
        out.push_back(acc);
        return;
    }
    for (int e = 0; e * sub <= max_deg; ++e) {
        if (e > 0) acc[sub] = unsigned(e);
        candidate_monomials_rec(max_sub, sub + 1, max_deg - e * sub, acc, out);
    }
    acc.erase(sub);
}

Rational monomial_value(const GeneratorMonomial& mono, const std::map<int, Rational>& gen_values) {
    Rational v = 1;
    for (const auto& [sub, e] : mono) v *= rational_pow(gen_values.at(sub), e);
    return v;
}

std::map<int, Rational> ordinary_cumulant_values(const Partition& p, int max_sub) {
    std::map<int, Rational> vals;
    for (int j = 2; j <= max_sub; ++j) vals[j] = biane_cumulant(p, j);
    return vals;
}

}  // namespace

KerovPolynomial ordinary_kerov(int k) {
    if (k < 1) throw std::invalid_argument("Kerov index must be >= 1");
    const int max_sub = k + 1;
    std::vector<GeneratorMonomial> candidates;
    GeneratorMonomial acc;
    candidate_monomials_rec(max_sub, 2, k + 1, acc, candidates);

    std::vector<Partition> pool{Partition{}};
    std::vector<RationalVector> rows;
    RationalVector rhs;
    auto add_partition = [&](const Partition& p) {
        std::map<int, Rational> gens = ordinary_cumulant_values(p, max_sub);
        RationalVector row;
        row.reserve(candidates.size());
        for (const GeneratorMonomial& mono : candidates) row.push_back(monomial_value(mono, gens));
        rows.push_back(std::move(row));
        rhs.push_back(ordinary_character_eval(k, p));
    };
    add_partition(Partition{});

    const int size_cap = k + 6;
    std::optional<RationalVector> solution;
    int n = 0;
    while (n < size_cap) {
        ++n;
        for (const Partition& p : enumerate_partitions(n, PartitionKind::All)) add_partition(p);
        solution = solve_full_column_rank(rows, rhs);
        if (solution) break;
    }
    if (!solution)
        throw std::runtime_error("interpolation system still rank-deficient at the size cap");

    // Held-out verification on partitions of the next two sizes.
    for (int m = n + 1; m <= n + 2; ++m) {
        for (const Partition& p : enumerate_partitions(m, PartitionKind::All)) {
            std::map<int, Rational> gens = ordinary_cumulant_values(p, max_sub);
            Rational predicted = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                predicted += (*solution)[i] * monomial_value(candidates[i], gens);
            if (predicted != ordinary_character_eval(k, p))
                throw std::runtime_error("held-out verification failed for partition " +
                                         p.to_string());
        }
    }

    KerovPolynomial result;
    result.family = CumulantFamily::Ordinary;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((*solution)[i] != 0) result.terms[candidates[i]] = (*solution)[i];
    return result;
}

std::vector<PositivityRecord> positivity_report(int max_k, CumulantFamily family) {
    if (max_k % 2 == 0) throw std::invalid_argument("positivity sweep expects odd max_k");
    if (family == CumulantFamily::Ordinary)
        throw std::invalid_argument("positivity sweep covers the spin families");
    std::vector<PositivityRecord> out;
    for (int k = 1; k <= max_k; k += 2) {
        KerovPolynomial kp =
            family == CumulantFamily::Spin ? spin_kerov(k) : symmetrized_spin_kerov(k);
        PositivityRecord rec;
        rec.k = k;
        for (const auto& [mono, c] : kp.terms) {
            bool bad = false;
            if (c < 0) {
                rec.all_nonnegative = false;
                bad = true;
            }
            if (!is_integer(c)) {
                rec.all_integers = false;
                bad = true;
            }
            if (bad) rec.offending.emplace_back(mono, c);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

ComparisonReport coincidence_report(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("coincidence report expects odd k >= 3");
    KerovPolynomial ord = ordinary_kerov(k);
    KerovPolynomial spin = spin_kerov(k);
    ComparisonReport rep;
    rep.k = k;
    auto coeff = [](const KerovPolynomial& kp, const GeneratorMonomial& m) -> Rational {
        auto it = kp.terms.find(m);
        return it == kp.terms.end() ? Rational(0) : it->second;
    };
    for (int sub = 2; sub <= k + 1; sub += 2) {
        GeneratorMonomial linear{{sub, 1}};
        Rational o = coeff(ord, linear);
        Rational s = coeff(spin, linear);
        rep.linear_matches.push_back({sub, o, s, o == s});
    }
    for (const auto& [mono, c] : spin.terms) {
        if (generator_monomial_weight(mono) != k - 1) continue;
        unsigned s_sum = 0;
        for (const auto& [sub, e] : mono) s_sum += e;
        Rational predicted(integer_pow(2, s_sum - 1));
        Rational o = coeff(ord, mono);
        rep.top_degree_ratios.push_back({mono, c, o, predicted, c == predicted * o});
    }
    return rep;
}

KerovPolynomial kerov_from_terms(
    CumulantFamily family,
    const std::vector<std::pair<GeneratorMonomial, std::string>>& terms) {
    KerovPolynomial kp;
    kp.family = family;
    for (const auto& [mono, coeff] : terms) {
        Rational c = parse_rational(coeff);
        if (c != 0) kp.terms[mono] += c;
    }
    return kp;
}

namespace {

// k <= 9 reference tables, verified against the published expansions.
std::map<int, KerovPolynomial> build_known_spin() {
    using M = GeneratorMonomial;
    std::map<int, KerovPolynomial> t;
    t[1] = kerov_from_terms(CumulantFamily::Spin, {{M{{2, 1}}, "1"}});
    t[3] = kerov_from_terms(CumulantFamily::Spin, {{M{{4, 1}}, "1"}, {M{{2, 1}}, "1"}});
    t[5] = kerov_from_terms(CumulantFamily::Spin, {{M{{6, 1}}, "1"},
                                                   {M{{4, 1}}, "15"},
                                                   {M{{2, 2}}, "10"},
                                                   {M{{2, 1}}, "8"}});
    t[7] = kerov_from_terms(CumulantFamily::Spin, {{M{{8, 1}}, "1"},
                                                   {M{{6, 1}}, "70"},
                                                   {M{{4, 1}, {2, 1}}, "168"},
                                                   {M{{2, 3}}, "56"},
                                                   {M{{4, 1}}, "469"},
                                                   {M{{2, 2}}, "560"},
                                                   {M{{2, 1}}, "180"}});
    t[9] = kerov_from_terms(CumulantFamily::Spin, {{M{{10, 1}}, "1"},
                                                   {M{{8, 1}}, "210"},
                                                   {M{{6, 1}, {2, 1}}, "600"},
                                                   {M{{4, 2}}, "540"},
                                                   {M{{4, 1}, {2, 2}}, "1080"},
                                                   {M{{2, 4}}, "240"},
                                                   {M{{6, 1}}, "5985"},
                                                   {M{{4, 1}, {2, 1}}, "23016"},
                                                   {M{{2, 3}}, "9120"},
                                                   {M{{4, 1}}, "26060"},
                                                   {M{{2, 2}}, "41628"},
                                                   {M{{2, 1}}, "8064"}});
    return t;
}

std::map<int, KerovPolynomial> build_known_ordinary() {
    using M = GeneratorMonomial;
    std::map<int, KerovPolynomial> t;
    t[1] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{2, 1}}, "1"}});
    t[2] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{3, 1}}, "1"}});
    t[3] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{4, 1}}, "1"}, {M{{2, 1}}, "1"}});
    t[4] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{5, 1}}, "1"}, {M{{3, 1}}, "5"}});
    t[5] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{6, 1}}, "1"},
                                                       {M{{4, 1}}, "15"},
                                                       {M{{2, 2}}, "5"},
                                                       {M{{2, 1}}, "8"}});
    t[7] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{8, 1}}, "1"},
                                                       {M{{6, 1}}, "70"},
                                                       {M{{4, 1}, {2, 1}}, "84"},
                                                       {M{{3, 2}}, "56"},
                                                       {M{{2, 3}}, "14"},
                                                       {M{{4, 1}}, "469"},
                                                       {M{{2, 2}}, "224"},
                                                       {M{{2, 1}}, "180"}});
    t[9] = kerov_from_terms(CumulantFamily::Ordinary, {{M{{10, 1}}, "1"},
                                                       {M{{8, 1}}, "210"},
                                                       {M{{6, 1}, {2, 1}}, "300"},
                                                       {M{{5, 1}, {3, 1}}, "480"},
                                                       {M{{4, 2}}, "270"},
                                                       {M{{3, 2}, {2, 1}}, "360"},
                                                       {M{{4, 1}, {2, 2}}, "270"},
                                                       {M{{2, 4}}, "30"},
                                                       {M{{6, 1}}, "5985"},
                                                       {M{{4, 1}, {2, 1}}, "10548"},
                                                       {M{{3, 2}}, "6714"},
                                                       {M{{2, 3}}, "2400"},
                                                       {M{{4, 1}}, "26060"},
                                                       {M{{2, 2}}, "14580"},
                                                       {M{{2, 1}}, "8064"}});
    return t;
}

}  // namespace

const std::map<int, KerovPolynomial>& known_spin_kerov() {
    static const std::map<int, KerovPolynomial> t = build_known_spin();
    return t;
}

const std::map<int, KerovPolynomial>& known_ordinary_kerov() {
    static const std::map<int, KerovPolynomial> t = build_known_ordinary();
    return t;
}

}  // namespace spinkerov
