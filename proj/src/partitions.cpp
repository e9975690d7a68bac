#include <spinkerov/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinkerov {

namespace {

int sum_parts(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string join_parts(const Parts& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

void check_weakly_decreasing(const Parts& p, const char* what) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw std::invalid_argument(std::string(what) + ": parts must be positive");
        if (i && p[i] > p[i - 1])
            throw std::invalid_argument(std::string(what) + ": parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(Parts parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_, "partition");
}

int Partition::size() const { return sum_parts(parts_); }
std::string Partition::to_string() const { return join_parts(parts_); }

StrictPartition::StrictPartition(Parts parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_, "strict partition");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1])
            throw std::invalid_argument("strict partition: parts must be distinct");
}

int StrictPartition::size() const { return sum_parts(parts_); }
std::string StrictPartition::to_string() const { return join_parts(parts_); }

OddPartition::OddPartition(Parts parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_, "odd partition");
    for (int p : parts_)
        if (p % 2 == 0) throw std::invalid_argument("odd partition: parts must be odd");
}

int OddPartition::size() const { return sum_parts(parts_); }
std::string OddPartition::to_string() const { return join_parts(parts_); }

Partition conjugate(const Partition& p) {
    Parts out;
    if (p.empty()) return Partition{};
    out.reserve(std::size_t(p.parts()[0]));
    for (int col = 1; col <= p.parts()[0]; ++col) {
        int cnt = 0;
        for (int part : p.parts())
            if (part >= col) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

FrobeniusCoords frobenius(const Partition& p) {
    Partition conj = conjugate(p);
    FrobeniusCoords c;
    const Rational half(1, 2);
    for (int i = 1; i <= p.length(); ++i) {
        if (p.parts()[std::size_t(i - 1)] < i) break;  // past the diagonal
        c.a.push_back(Rational(p.parts()[std::size_t(i - 1)] - i) + half);
        c.b.push_back(Rational(conj.parts()[std::size_t(i - 1)] - i) + half);
    }
    return c;
}

namespace {

void check_frobenius(const FrobeniusCoords& c) {
    if (c.a.size() != c.b.size())
        throw std::invalid_argument("frobenius: coordinate sequences differ in length");
    auto check_seq = [](const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 0) throw std::invalid_argument("frobenius: entries must be positive");
            if (v[i].get_den() != 2)
                throw std::invalid_argument("frobenius: entries must be half-integers");
            if (i && v[i] >= v[i - 1])
                throw std::invalid_argument("frobenius: entries must be strictly decreasing");
        }
    };
    check_seq(c.a);
    check_seq(c.b);
}

}  // namespace

Partition from_frobenius(const FrobeniusCoords& c) {
    check_frobenius(c);
    const std::size_t d = c.a.size();
    const Rational half(1, 2);
    Parts rows;
    // lambda_i = a_i + i - 1/2 for the first d rows.
    for (std::size_t i = 0; i < d; ++i) {
        Rational v = c.a[i] + Rational(int(i) + 1) - half;
        rows.push_back(int(v.get_num().get_si()));
    }
    // Column lengths below the diagonal come from b.
    Parts cols;
    for (std::size_t i = 0; i < d; ++i) {
        Rational v = c.b[i] + Rational(int(i) + 1) - half;
        cols.push_back(int(v.get_num().get_si()));
    }
    // Rows d+1, d+2, ... are read off the conjugate built from cols.
    for (int row = int(d) + 1;; ++row) {
        int cnt = 0;
        for (int cl : cols)
            if (cl >= row) ++cnt;
        if (cnt == 0) break;
        if (cnt > int(d)) throw std::invalid_argument("frobenius: inconsistent coordinates");
        rows.push_back(cnt);
    }
    Partition result(std::move(rows));
    FrobeniusCoords back = frobenius(result);
    if (back.a != c.a || back.b != c.b)
        throw std::invalid_argument("frobenius: coordinates do not describe a partition");
    return result;
}

Partition double_diagram(const StrictPartition& lambda) {
    FrobeniusCoords c;
    const Rational half(1, 2);
    for (int part : lambda.parts()) {
        c.a.push_back(Rational(part) + half);
        c.b.push_back(Rational(part) - half);
    }
    return from_frobenius(c);
}

InterlacingCoords interlacing(const Partition& p) {
    InterlacingCoords c;
    // Contents (column - row) of addable corners are the profile minima;
    // contents of removable corners are the maxima.
    const Parts& parts = p.parts();
    const int len = p.length();
    for (int i = 1; i <= len; ++i) {
        int part = parts[std::size_t(i - 1)];
        int prev = i == 1 ? -1 : parts[std::size_t(i - 2)];
        if (i == 1 || part < prev) c.x.push_back(part + 1 - i);        // addable at (i, part+1)
        int next = i == len ? 0 : parts[std::size_t(i)];
        if (part > next) c.y.push_back(part - i);                      // removable at (i, part)
    }
    c.x.push_back(-len);  // addable box in the first empty row
    std::sort(c.x.begin(), c.x.end());
    std::sort(c.y.begin(), c.y.end());
    return c;
}

Integer z_factor(const Partition& nu) {
    std::map<int, int> mult;
    for (int part : nu.parts()) ++mult[part];
    Integer z = 1;
    for (const auto& [i, m] : mult) {
        z *= integer_pow(i, unsigned(m));
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), unsigned(m));
        z *= f;
    }
    return z;
}

namespace {

void enumerate_rec(int remaining, int max_part, PartitionKind kind, Parts& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (kind == PartitionKind::Odd && part % 2 == 0) continue;
        int next_max = kind == PartitionKind::Strict ? part - 1 : part;
        acc.push_back(part);
        enumerate_rec(remaining - part, next_max, kind, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, PartitionKind kind) {
    if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
    std::vector<Partition> out;
    Parts acc;
    enumerate_rec(n, n, kind, acc, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict(int n) {
    std::vector<StrictPartition> out;
    for (const Partition& p : enumerate_partitions(n, PartitionKind::Strict))
        out.emplace_back(p.parts());
    return out;
}

std::vector<OddPartition> enumerate_odd(int n) {
    std::vector<OddPartition> out;
    for (const Partition& p : enumerate_partitions(n, PartitionKind::Odd))
        out.emplace_back(p.parts());
    return out;
}

std::map<int, Rational> power_sums(const StrictPartition& lambda, int max_subscript) {
    if (max_subscript % 2 == 0)
        throw std::invalid_argument("power sum subscripts must be odd");
    std::map<int, Rational> out;
    for (int k = 1; k <= max_subscript; k += 2) {
        Integer s = 0;
        for (int part : lambda.parts()) s += integer_pow(part, unsigned(k));
        out[k] = Rational(s);
    }
    return out;
}

Parts parse_parts(const std::string& text) {
    Parts parts;
    if (text.empty()) return parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("unparseable partition part: '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("unparseable partition part: '" + tok + "'");
        parts.push_back(v);
    }
    return parts;
}

}  // namespace spinkerov
