#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spinkerov/measures.hpp>
#include <spinkerov/partitions.hpp>

#include "support.hpp"

#include <vector>

using spinkerov::testing::shifted_phi;

using namespace spinkerov;

namespace {

// Independent moment-from-cumulant oracle: sum over all noncrossing set
// partitions of {1..n} of the product of R_{block size}.
bool is_noncrossing(const std::vector<int>& block_of) {
    int n = int(block_of.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
                        block_of[a] != block_of[b])
                        return false;
    return true;
}

Rational nc_moment(const std::vector<Rational>& cumulants, int n) {
    std::vector<int> block_of(std::size_t(n), 0);
    Rational total = 0;
    // Restricted growth strings enumerate set partitions exactly once.
    auto rec = [&](auto&& self, int pos, int max_block) -> void {
        if (pos == n) {
            if (!is_noncrossing(block_of)) return;
            std::vector<int> sizes(std::size_t(max_block) + 1, 0);
            for (int b : block_of) ++sizes[std::size_t(b)];
            Rational prod = 1;
            for (int b = 0; b <= max_block; ++b) prod *= cumulants[std::size_t(sizes[std::size_t(b)] - 1)];
            total += prod;
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            block_of[std::size_t(pos)] = b;
            self(self, pos + 1, std::max(max_block, b));
        }
    };
    rec(rec, 1, 0);  // element 0 always sits in block 0
    return total;
}

}  // namespace

TEST_CASE("rayleigh measure") {
    AtomicMeasure empty = rayleigh_measure(Partition());
    REQUIRE(empty.atoms.size() == 1);
    CHECK(empty.atoms[0] == std::pair<Rational, Rational>{0, 1});

    AtomicMeasure m = rayleigh_measure(Partition({3, 3}));
    REQUIRE(m.atoms.size() == 3);
    CHECK(m.moment(0) == 1);
    CHECK(m.moment(1) == 0);
    CHECK(m.moment(2) == 12);  // 4 + 9 - 1

    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            AtomicMeasure t = rayleigh_measure(mu);
            CHECK(t.total_mass() == 1);
            CHECK(t.moment(1) == 0);
            for (const auto& [loc, w] : t.atoms) CHECK((w == 1 || w == -1));
        }
}

TEST_CASE("transition moments from the rayleigh convolution") {
    // M_2 of the transition measure is half of M_2 of the Rayleigh measure.
    CHECK(transition_moments(Partition({3, 3}), 2) == std::vector<Rational>{0, 6});
    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            auto moments = transition_moments(mu, 8);
            CHECK(moments[0] == 0);
            CHECK(moments[1] == n);
            RationalTail zg = transition_zg_series(mu, 8);
            CHECK(zg.coefficient(0) == 1);
            for (int k = 1; k <= 8; ++k) CHECK(zg.coefficient(k) == moments[std::size_t(k - 1)]);
        }
}

TEST_CASE("moment/cumulant conversion") {
    SUBCASE("roundtrip") {
        std::vector<Rational> moments{make_rational(1, 2), 3, make_rational(-7, 3), 0, 5, 1, 2, -4};
        CHECK(cumulants_to_moments(moments_to_cumulants(moments)) == moments);
    }

    SUBCASE("noncrossing-partition oracle") {
        std::vector<Rational> cumulants{make_rational(1, 3), -2, 5, make_rational(7, 2), 1, -1};
        std::vector<Rational> moments = cumulants_to_moments(cumulants);
        for (int n = 1; n <= 6; ++n) CHECK(moments[std::size_t(n - 1)] == nc_moment(cumulants, n));
    }
}

TEST_CASE("biane extraction agrees with the moment recursion") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            auto cumulants = moments_to_cumulants(transition_moments(mu, 8));
            CHECK(cumulants[0] == 0);
            for (int k = 2; k <= 8; ++k)
                CHECK(biane_cumulant(mu, k) == cumulants[std::size_t(k - 1)]);
        }
}

TEST_CASE("cumulant spot values") {
    CHECK(biane_cumulant(Partition({3}), 4) == 3);
    CHECK(biane_cumulant(Partition({3, 3}), 4) == -30);
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All))
            CHECK(biane_cumulant(mu, 2) == n);
}

TEST_CASE("self-conjugate partitions have vanishing odd cumulants") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            if (!(conjugate(mu) == mu)) continue;
            for (int k = 3; k <= 9; k += 2) CHECK(biane_cumulant(mu, k) == 0);
        }
}

TEST_CASE("super power sums reproduce rayleigh moments") {
    FrobeniusCoords c21 = frobenius(Partition({3, 3}));  // D((2,1))
    CHECK(super_power_sum(c21, 1) == 6);
    CHECK(super_power_sum(c21, 2) == 6);
    CHECK(rayleigh_from_super(c21, 2) == 12);
    CHECK(rayleigh_moments(Partition({3, 3}), 2) == std::vector<Rational>{0, 12});

    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            FrobeniusCoords c = frobenius(mu);
            auto moments = rayleigh_moments(mu, 8);
            CHECK(moments[0] == 0);
            for (int m = 2; m <= 8; ++m)
                CHECK(moments[std::size_t(m - 1)] == rayleigh_from_super(c, m));
        }
}

TEST_CASE("cauchy transform from half-shifted phi") {
    // z G(z) for the transition measure of mu equals phi(z-1/2)/phi(z+1/2).
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            FrobeniusCoords c = frobenius(mu);
            RationalTail num = shifted_phi(c, make_rational(1, 2), 10);
            RationalTail den = shifted_phi(c, make_rational(-1, 2), 10);
            RationalTail lhs = transition_zg_series(mu, 10);
            RationalTail rhs = num * den.inverse();
            for (int m = 0; m <= rhs.truncation_order(); ++m)
                CHECK(lhs.coefficient(m) == rhs.coefficient(m));
        }
}

TEST_CASE("phi series matches the explicit product") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionKind::All)) {
            FrobeniusCoords c = frobenius(mu);
            RationalTail direct = shifted_phi(c, 0, 10);
            RationalTail viaseries = phi_series(c, 10);
            for (int m = 0; m <= 10; ++m)
                CHECK(direct.coefficient(m) == viaseries.coefficient(m));
        }
}
