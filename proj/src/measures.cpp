#include <spinkerov/measures.hpp>

namespace spinkerov {

Rational AtomicMeasure::total_mass() const {
    Rational s = 0;
    for (const auto& [x, w] : atoms) s += w;
    return s;
}

Rational AtomicMeasure::moment(int k) const {
    Rational s = 0;
    for (const auto& [x, w] : atoms) s += w * rational_pow(x, unsigned(k));
    return s;
}

AtomicMeasure rayleigh_measure(const Partition& mu) {
    InterlacingCoords ic = interlacing(mu);
    AtomicMeasure m;
    for (int x : ic.x) m.atoms.emplace_back(Rational(x), 1);
    for (int y : ic.y) m.atoms.emplace_back(Rational(y), -1);
    return m;
}

std::vector<Rational> rayleigh_moments(const Partition& mu, int n) {
    if (n < 1) throw std::invalid_argument("moment count must be at least 1");
    AtomicMeasure m = rayleigh_measure(mu);
    std::vector<Rational> out;
    out.reserve(std::size_t(n));
    for (int k = 1; k <= n; ++k) out.push_back(m.moment(k));
    return out;
}

std::vector<Rational> transition_moments(const Partition& mu, int n) {
    std::vector<Rational> tau = rayleigh_moments(mu, n);
    std::vector<Rational> out;
    out.reserve(std::size_t(n));
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (const Partition& nu : enumerate_partitions(m, PartitionKind::All)) {
            Rational prod = Rational(1) / Rational(z_factor(nu));
            for (int part : nu.parts()) prod *= tau[std::size_t(part - 1)];
            s += prod;
        }
        out.push_back(s);
    }
    return out;
}

namespace {

// Convolution powers: comp[k][m] = sum over (i_1,...,i_k), i_j >= 0,
// i_1+...+i_k = m of prod M_{i_j}, with M_0 = 1.
std::vector<std::vector<Rational>> composition_sums(const std::vector<Rational>& m,
                                                    std::size_t max_k, std::size_t max_m) {
    std::vector<std::vector<Rational>> comp(max_k + 1,
                                            std::vector<Rational>(max_m + 1, 0));
    comp[0][0] = 1;
    auto moment = [&](std::size_t i) -> Rational {
        return i == 0 ? Rational(1) : m[i - 1];
    };
    for (std::size_t k = 1; k <= max_k; ++k)
        for (std::size_t t = 0; t <= max_m; ++t)
            for (std::size_t i = 0; i <= t; ++i)
                comp[k][t] += moment(i) * comp[k - 1][t - i];
    return comp;
}

}  // namespace

// Free moment-cumulant recursion: M_n = sum_{k=1}^{n} R_k * comp[k][n-k].
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments) {
    const std::size_t n = moments.size();
    std::vector<Rational> r(n, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational s = moments[m - 1];
        auto comp = composition_sums(moments, m, m);
        for (std::size_t k = 1; k < m; ++k) s -= r[k - 1] * comp[k][m - k];
        r[m - 1] = s;  // comp[m][0] = 1
    }
    return r;
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants) {
    const std::size_t n = cumulants.size();
    std::vector<Rational> m(n, 0);
    for (std::size_t t = 1; t <= n; ++t) {
        auto comp = composition_sums(m, t, t);  // uses M_1..M_{t-1} only
        Rational s = 0;
        for (std::size_t k = 1; k <= t; ++k) s += cumulants[k - 1] * comp[k][t - k];
        m[t - 1] = s;
    }
    return m;
}

RationalTail transition_zg_series(const Partition& mu, int order) {
    InterlacingCoords ic = interlacing(mu);
    // zG = prod (1 - y_j/z) / prod_{i>=2}... write G = z^{-1} A B^{-1} with
    // A = prod (1 - y/z), B = prod (1 - x/z); then zG = A B^{-1}.
    RationalTail a = RationalTail::one(order);
    for (int y : ic.y) {
        RationalTail f = RationalTail::one(order);
        f.set_coefficient(1, Rational(-y));
        a = a * f;
    }
    RationalTail b = RationalTail::one(order);
    for (int x : ic.x) {
        RationalTail f = RationalTail::one(order);
        f.set_coefficient(1, Rational(-x));
        b = b * f;
    }
    return a * b.inverse();
}

Rational free_cumulant_from_zg(const RationalTail& zg, int k) {
    if (k < 2) throw std::invalid_argument("free cumulant index must be >= 2");
    RationalTail t = zg.inverse().pow(unsigned(k - 1));
    return -t.coefficient(k) / Rational(k - 1);
}

Rational biane_cumulant(const Partition& mu, int k) {
    if (k < 2) throw std::invalid_argument("free cumulant index must be >= 2");
    // One guard coefficient beyond what the extraction needs.
    const int order = k + 2;
    return free_cumulant_from_zg(transition_zg_series(mu, order), k);
}

Rational super_power_sum(const FrobeniusCoords& c, int k) {
    if (k < 1) throw std::invalid_argument("super power sum index must be >= 1");
    Rational s = 0;
    int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
    for (std::size_t i = 0; i < c.a.size(); ++i)
        s += rational_pow(c.a[i], unsigned(k)) + Rational(sign) * rational_pow(c.b[i], unsigned(k));
    return s;
}

Rational rayleigh_from_super(const FrobeniusCoords& c, int n) {
    if (n < 2) throw std::invalid_argument("rayleigh_from_super needs n >= 2");
    Rational s = 0;
    for (int j = 0; 2 * j + 1 <= n - 1; ++j) {
        Rational coeff = Rational(binomial(unsigned(n), unsigned(2 * j + 1))) /
                         Rational(integer_pow(2, unsigned(2 * j)));
        s += coeff * super_power_sum(c, n - 2 * j - 1);
    }
    return s;
}

RationalTail phi_series(const FrobeniusCoords& c, int order) {
    // log phi = sum_k p_k^super / k z^{-k}
    RationalTail log_phi(order);
    for (int k = 1; k <= order; ++k)
        log_phi.set_coefficient(k, super_power_sum(c, k) / Rational(k));
    return log_phi.exp();
}

}  // namespace spinkerov
