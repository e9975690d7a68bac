#pragma once

#include <spinkerov/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace spinkerov {

using Parts = std::vector<int>;

// Weakly decreasing sequence of positive integers; the empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(Parts parts);

    const Parts& parts() const { return parts_; }
    int size() const;          // |lambda|
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const;  // "5,4,2,1"; "" for the empty partition

private:
    Parts parts_;
};

class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(Parts parts);

    const Parts& parts() const { return parts_; }
    int size() const;
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    Partition as_partition() const { return Partition(parts_); }

    bool operator==(const StrictPartition& o) const = default;
    auto operator<=>(const StrictPartition& o) const = default;

    std::string to_string() const;

private:
    Parts parts_;
};

class OddPartition {
public:
    OddPartition() = default;
    explicit OddPartition(Parts parts);

    const Parts& parts() const { return parts_; }
    int size() const;
    int length() const { return int(parts_.size()); }
    Partition as_partition() const { return Partition(parts_); }

    bool operator==(const OddPartition& o) const = default;
    auto operator<=>(const OddPartition& o) const = default;

    std::string to_string() const;

private:
    Parts parts_;
};

// Modified Frobenius coordinates: a_i = lambda_i - i + 1/2, b_i = lambda'_i - i + 1/2.
// All entries lie in Z + 1/2 and both sequences are strictly decreasing.
struct FrobeniusCoords {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

// Local minima x and maxima y of the Russian-style profile:
// x_1 < y_1 < x_2 < ... < y_{r-1} < x_r, with sum(x) = sum(y).
struct InterlacingCoords {
    std::vector<int> x;
    std::vector<int> y;
};

Partition conjugate(const Partition& p);

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& c);

// D(lambda) = [lambda_i + 1/2 | lambda_i - 1/2] in modified Frobenius notation.
Partition double_diagram(const StrictPartition& lambda);

InterlacingCoords interlacing(const Partition& p);

// z_nu = prod over i of i^{m_i} m_i!
Integer z_factor(const Partition& nu);

enum class PartitionKind { All, Strict, Odd };

// All partitions of n of the given kind, in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n, PartitionKind kind);
std::vector<StrictPartition> enumerate_strict(int n);
std::vector<OddPartition> enumerate_odd(int n);

// p_k(lambda) = sum lambda_i^k for odd k = 1, 3, ..., maxSubscript.
std::map<int, Rational> power_sums(const StrictPartition& lambda, int max_subscript);

// CLI/JSON text forms: comma-separated parts, empty string for the empty partition.
Parts parse_parts(const std::string& text);

}  // namespace spinkerov
