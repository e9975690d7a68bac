#include <spinkerov/oracle.hpp>

#include <spinkerov/laurent.hpp>
#include <spinkerov/linalg.hpp>

#include <algorithm>
#include <mutex>

namespace spinkerov {
namespace oracle {

std::vector<OddPolynomial> q_polynomials(int max_r) {
    if (max_r < 0) throw std::invalid_argument("q_polynomials: max_r must be >= 0");
    // Reuse the Laurent machinery with t = z^{-1}.
    PolynomialTail log_q(max_r);
    for (int k = 1; k <= max_r; k += 2)
        log_q.set_coefficient(k, OddPolynomial::generator(k) * Rational(2, k));
    PolynomialTail q = log_q.exp();
    std::vector<OddPolynomial> out;
    out.reserve(std::size_t(max_r) + 1);
    for (int r = 0; r <= max_r; ++r) out.push_back(q.coefficient(r));
    return out;
}

namespace {

// Q_{(a,b)} for a > b >= 0: q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}.
OddPolynomial two_row_q(int a, int b, const std::vector<OddPolynomial>& q) {
    OddPolynomial out = q[std::size_t(a)] * q[std::size_t(b)];
    for (int i = 1; i <= b; ++i) {
        OddPolynomial term = q[std::size_t(a + i)] * q[std::size_t(b - i)] * Rational(2);
        if (i % 2 == 1)
            out -= term;
        else
            out += term;
    }
    return out;
}

// Pfaffian by expansion along the first row: Pf = sum_j (-1)^j M_{1j} Pf(rest).
OddPolynomial pfaffian(const std::vector<int>& rows,
                       const std::vector<std::vector<OddPolynomial>>& m) {
    if (rows.empty()) return OddPolynomial::constant(1);
    OddPolynomial out;
    for (std::size_t j = 1; j < rows.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t t = 1; t < rows.size(); ++t)
            if (t != j) rest.push_back(rows[t]);
        OddPolynomial sub = pfaffian(rest, m);
        OddPolynomial term = m[std::size_t(rows[0])][std::size_t(rows[j])] * sub;
        if (j % 2 == 1)
            out += term;
        else
            out -= term;
    }
    return out;
}

}  // namespace

OddPolynomial schur_q(const StrictPartition& lambda) {
    if (lambda.empty()) return OddPolynomial::constant(1);
    Parts parts = lambda.parts();
    auto q = q_polynomials(lambda.size());
    if (parts.size() == 1) return q[std::size_t(parts[0])];
    if (parts.size() % 2 == 1) parts.push_back(0);
    const std::size_t l = parts.size();
    std::vector<std::vector<OddPolynomial>> m(l, std::vector<OddPolynomial>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) m[i][j] = two_row_q(parts[i], parts[j], q);
    std::vector<int> rows(l);
    for (std::size_t i = 0; i < l; ++i) rows[i] = int(i);
    return pfaffian(rows, m);
}

namespace {

// Exponent key of the monomial p_rho for an odd partition rho.
Exponents monomial_of(const OddPartition& rho) {
    Exponents e;
    for (int part : rho.parts()) {
        std::size_t j = std::size_t((part - 1) / 2);
        if (e.size() <= j) e.resize(j + 1, 0);
        ++e[j];
    }
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

}  // namespace

SpinCharacterTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    SpinCharacterTable table;
    table.n = n;
    std::vector<StrictPartition> strict = enumerate_strict(n);
    std::vector<OddPartition> odd = enumerate_odd(n);
    const std::size_t dim = strict.size();
    if (odd.size() != dim)
        throw std::runtime_error("strict/odd partition counts differ; enumeration bug");

    std::map<Exponents, std::size_t, MonomialLess> row_index;
    for (std::size_t i = 0; i < odd.size(); ++i) row_index[monomial_of(odd[i])] = i;

    // B[rho-monomial][lambda] = coefficient of p_rho in P_lambda.
    RationalMatrix b(dim, RationalVector(dim, 0));
    for (std::size_t col = 0; col < dim; ++col) {
        OddPolynomial p = schur_q(strict[col]);
        Rational scale = Rational(1) / Rational(integer_pow(2, unsigned(strict[col].length())));
        for (const auto& [e, c] : p.terms()) {
            auto it = row_index.find(e);
            if (it == row_index.end())
                throw std::runtime_error("Q-function monomial outside the odd-partition basis");
            b[it->second][col] = c * scale;
        }
    }

    for (std::size_t r = 0; r < odd.size(); ++r) {
        RationalVector rhs(dim, 0);
        rhs[r] = 1;
        RationalVector x = solve_square(b, rhs);
        for (std::size_t col = 0; col < dim; ++col) {
            if (!is_integer(x[col]))
                throw std::runtime_error("non-integer spin character value; internal bug");
            table.values[{strict[col], odd[r]}] = x[col].get_num();
        }
    }
    for (const StrictPartition& lam : strict) {
        Parts ones(std::size_t(n), 1);
        table.dimensions[lam] = table.values.at({lam, OddPartition(ones)});
    }
    return table;
}

namespace {

const SpinCharacterTable& cached_table(int n) {
    static std::map<int, SpinCharacterTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, character_table(n)).first;
    return it->second;
}

}  // namespace

Rational normalized_character(const OddPartition& rho, const StrictPartition& lambda) {
    const int k = rho.size();
    const int n = lambda.size();
    if (k > n) return 0;
    if (n == 0) return 1;  // rho and lambda both empty
    const SpinCharacterTable& table = cached_table(n);
    Parts padded = rho.parts();
    padded.insert(padded.end(), std::size_t(n - k), 1);
    OddPartition full(padded);
    Integer x = table.values.at({lambda, full});
    Integer g = table.dimensions.at(lambda);
    return Rational(falling_factorial(unsigned(n), unsigned(k))) * Rational(x) / Rational(g);
}

}  // namespace oracle
}  // namespace spinkerov
