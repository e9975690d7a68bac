#pragma once

#include <spinkerov/polynomial.hpp>
#include <spinkerov/rational.hpp>

#include <stdexcept>
#include <vector>

namespace spinkerov {

// Coefficient-ring hooks for LaurentTail. The degree cap only acts on
// polynomial coefficients; rationals pass through.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& r) { return r == 0; }
    static Rational mul(const Rational& a, const Rational& b, int) { return a * b; }
    static Rational cap(const Rational& r, int) { return r; }
};

template <>
struct RingOps<OddPolynomial> {
    static OddPolynomial zero() { return {}; }
    static OddPolynomial one() { return OddPolynomial::constant(1); }
    static bool is_zero(const OddPolynomial& r) { return r.is_zero(); }
    static OddPolynomial mul(const OddPolynomial& a, const OddPolynomial& b, int cap) {
        return mul_capped(a, b, cap);
    }
    static OddPolynomial cap(const OddPolynomial& r, int cap) {
        return cap < 0 ? r : r.truncated(cap);
    }
};

// Truncated series  sum_{n >= lead} c_n z^{-n}  with all retained coefficients
// exact through z^{-order}. lead may be negative (polynomial part in z).
// Binary operations require matching truncation orders and degree caps;
// multiplication shrinks the reliable order when an operand has negative lead.
template <class R>
class LaurentTail {
public:
    using Ops = RingOps<R>;

    explicit LaurentTail(int order, int degree_cap = -1)
        : lead_(order + 1), order_(order), cap_(degree_cap) {}

    static LaurentTail monomial(const R& c, int n, int order, int degree_cap = -1) {
        LaurentTail t(order, degree_cap);
        t.set_coefficient(n, c);
        return t;
    }

    static LaurentTail one(int order, int degree_cap = -1) {
        return monomial(Ops::one(), 0, order, degree_cap);
    }

    int leading_exponent() const { return lead_; }
    int truncation_order() const { return order_; }
    int degree_cap() const { return cap_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of z^{-n}; zero below the leading exponent, error above the
    // truncation order (the caller must re-expand at higher order).
    const R& coefficient(int n) const {
        if (n > order_)
            throw std::out_of_range("coefficient z^-" + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(order_));
        static const R kZero = Ops::zero();
        if (n < lead_ || n >= lead_ + int(coeffs_.size())) return kZero;
        return coeffs_[std::size_t(n - lead_)];
    }

    void set_coefficient(int n, const R& c) {
        if (n > order_) return;
        R v = Ops::cap(c, cap_);
        if (coeffs_.empty()) {
            if (Ops::is_zero(v)) return;
            lead_ = n;
            coeffs_.push_back(std::move(v));
            return;
        }
        if (n < lead_) {
            coeffs_.insert(coeffs_.begin(), std::size_t(lead_ - n), Ops::zero());
            lead_ = n;
        } else if (n >= lead_ + int(coeffs_.size())) {
            coeffs_.resize(std::size_t(n - lead_) + 1, Ops::zero());
        }
        coeffs_[std::size_t(n - lead_)] = std::move(v);
        normalize();
    }

    LaurentTail truncated_to(int order) const {
        if (order > order_)
            throw std::invalid_argument("cannot extend truncation order without re-expanding");
        LaurentTail t(order, cap_);
        for (int n = lead_; n <= std::min(order, lead_ + int(coeffs_.size()) - 1); ++n)
            t.set_coefficient(n, coefficient(n));
        return t;
    }

    LaurentTail& operator+=(const LaurentTail& o) {
        require_compatible(o, "add");
        for (int n = o.lead_; n < o.lead_ + int(o.coeffs_.size()); ++n)
            add_coefficient(n, o.coeffs_[std::size_t(n - o.lead_)]);
        normalize();
        return *this;
    }

    LaurentTail& operator-=(const LaurentTail& o) {
        require_compatible(o, "subtract");
        for (int n = o.lead_; n < o.lead_ + int(o.coeffs_.size()); ++n) {
            R v = o.coeffs_[std::size_t(n - o.lead_)];
            add_coefficient(n, negate(v));
        }
        normalize();
        return *this;
    }

    friend LaurentTail operator+(LaurentTail a, const LaurentTail& b) { return a += b; }
    friend LaurentTail operator-(LaurentTail a, const LaurentTail& b) { return a -= b; }

    LaurentTail& scale(const R& c) {
        for (auto& v : coeffs_) v = Ops::mul(v, c, cap_);
        normalize();
        return *this;
    }

    friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
        a.require_compatible(b, "multiply");
        if (a.is_zero() || b.is_zero()) return LaurentTail(a.order_, a.cap_);
        // Each operand is exact through z^{-order}; the product stays exact
        // only through order + (other lead).
        int order = std::min(a.order_ + b.lead_, b.order_ + a.lead_);
        LaurentTail r(order, a.cap_);
        for (int i = a.lead_; i < a.lead_ + int(a.coeffs_.size()); ++i) {
            const R& ca = a.coeffs_[std::size_t(i - a.lead_)];
            if (Ops::is_zero(ca)) continue;
            for (int j = b.lead_; j < b.lead_ + int(b.coeffs_.size()); ++j) {
                if (i + j > order) break;
                const R& cb = b.coeffs_[std::size_t(j - b.lead_)];
                if (Ops::is_zero(cb)) continue;
                r.add_coefficient(i + j, Ops::mul(ca, cb, a.cap_));
            }
        }
        r.normalize();
        return r;
    }

    // Integer power, n >= 0; the result is truncated back to this order.
    LaurentTail pow(unsigned e) const {
        if (!is_zero() && lead_ < 0)
            throw std::domain_error("pow is only supported for tails without polynomial part");
        LaurentTail r = one(order_, cap_);
        LaurentTail b = *this;
        while (e > 0) {
            if (e & 1) r = (r * b).truncated_to(order_);
            if (e >>= 1) b = (b * b).truncated_to(order_);
        }
        return r;
    }

    // Formal exponential, defined only for leading exponent >= 1.
    LaurentTail exp() const {
        if (!is_zero() && lead_ < 1)
            throw std::domain_error("formal exponential needs leading exponent >= 1");
        LaurentTail r = one(order_, cap_);
        LaurentTail term = one(order_, cap_);
        for (int m = 1; m <= order_; ++m) {
            term = (term * *this).truncated_to(order_);
            term.scale_rational(Rational(1, m));
            if (term.is_zero()) break;
            r += term;
        }
        return r;
    }

    // Reciprocal of a series with leading exponent 0 and invertible constant
    // term; only provided over the rational coefficient ring.
    LaurentTail inverse() const
        requires std::same_as<R, Rational>
    {
        if (lead_ != 0 || coefficient(0) == 0)
            throw std::domain_error("inverse needs constant leading term");
        Rational c0 = coefficient(0);
        LaurentTail r(order_, cap_);
        std::vector<Rational> inv(std::size_t(order_) + 1, 0);
        inv[0] = 1 / c0;
        for (int n = 1; n <= order_; ++n) {
            Rational s = 0;
            for (int i = 1; i <= n; ++i) s += coefficient(i) * inv[std::size_t(n - i)];
            inv[std::size_t(n)] = -s / c0;
        }
        for (int n = 0; n <= order_; ++n) r.set_coefficient(n, inv[std::size_t(n)]);
        return r;
    }

    // Multiply by z^p (exact); the reliable order drops by p for p > 0.
    LaurentTail times_z_power(int p) const {
        LaurentTail r(order_ - p, cap_);
        for (int n = lead_; n < lead_ + int(coeffs_.size()); ++n)
            r.set_coefficient(n - p, coeffs_[std::size_t(n - lead_)]);
        return r;
    }

    void scale_rational(const Rational& c) {
        if constexpr (std::same_as<R, Rational>) {
            scale(c);
        } else {
            scale(OddPolynomial::constant(c));
        }
    }

private:
    void require_compatible(const LaurentTail& o, const char* what) const {
        if (order_ != o.order_)
            throw std::invalid_argument(std::string(what) + ": truncation orders differ (" +
                                        std::to_string(order_) + " vs " +
                                        std::to_string(o.order_) + ")");
        if (cap_ != o.cap_)
            throw std::invalid_argument(std::string(what) + ": degree caps differ");
    }

    static R negate(const R& v) {
        if constexpr (std::same_as<R, Rational>) {
            return -v;
        } else {
            return -v;
        }
    }

    void add_coefficient(int n, const R& c) {
        if (n > order_ || Ops::is_zero(c)) return;
        if (coeffs_.empty()) {
            lead_ = n;
            coeffs_.push_back(Ops::cap(c, cap_));
            return;
        }
        if (n < lead_) {
            coeffs_.insert(coeffs_.begin(), std::size_t(lead_ - n), Ops::zero());
            lead_ = n;
        } else if (n >= lead_ + int(coeffs_.size())) {
            coeffs_.resize(std::size_t(n - lead_) + 1, Ops::zero());
        }
        auto& slot = coeffs_[std::size_t(n - lead_)];
        if constexpr (std::same_as<R, Rational>) {
            slot += c;
        } else {
            slot += c;
            slot = Ops::cap(slot, cap_);
        }
    }

    void normalize() {
        while (!coeffs_.empty() && Ops::is_zero(coeffs_.front())) {
            coeffs_.erase(coeffs_.begin());
            ++lead_;
        }
        while (!coeffs_.empty() && Ops::is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) lead_ = order_ + 1;
    }

    int lead_;
    int order_;
    std::vector<R> coeffs_;
    int cap_;
};

using RationalTail = LaurentTail<Rational>;
using PolynomialTail = LaurentTail<OddPolynomial>;

// (z - c)^{-m} = sum_{i>=0} binom(m+i-1, i) c^i z^{-m-i}, truncated at z^{-order}.
inline RationalTail expand_shifted_inverse_power(int m, const Rational& c, int order) {
    if (m <= 0) throw std::invalid_argument("inverse power exponent must be positive");
    if (order < m) throw std::invalid_argument("order must be at least the exponent");
    RationalTail t(order);
    Rational cpow = 1;
    for (int i = 0; m + i <= order; ++i) {
        t.set_coefficient(m + i, Rational(binomial(std::size_t(m + i - 1), std::size_t(i))) * cpow);
        cpow *= c;
    }
    return t;
}

// Embed a rational-coefficient tail into the polynomial ring, scaled by f.
inline PolynomialTail scaled_embed(const RationalTail& t, const OddPolynomial& f, int cap) {
    PolynomialTail r(t.truncation_order(), cap);
    for (int n = t.leading_exponent(); n <= t.truncation_order(); ++n) {
        const Rational& c = t.coefficient(n);
        if (c == 0) continue;
        r.set_coefficient(n, f * c);
    }
    return r;
}

}  // namespace spinkerov
