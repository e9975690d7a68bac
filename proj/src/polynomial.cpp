#include <spinkerov/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace spinkerov {

namespace {

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

OddPolynomial OddPolynomial::constant(const Rational& c) {
    OddPolynomial p;
    p.add_term({}, c);
    return p;
}

OddPolynomial OddPolynomial::generator(int subscript) {
    if (subscript < 1 || subscript % 2 == 0)
        throw std::invalid_argument("generator subscript must be odd and positive, got " +
                                    std::to_string(subscript));
    Exponents e(std::size_t((subscript - 1) / 2) + 1, 0);
    e.back() = 1;
    OddPolynomial p;
    p.add_term(e, 1);
    return p;
}

void OddPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    Exponents key = e;
    trim(key);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OddPolynomial OddPolynomial::operator-() const {
    OddPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

OddPolynomial& OddPolynomial::operator+=(const OddPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

OddPolynomial& OddPolynomial::operator-=(const OddPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

OddPolynomial& OddPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

OddPolynomial operator*(const OddPolynomial& a, const OddPolynomial& b) {
    return mul_capped(a, b, -1);
}

OddPolynomial mul_capped(const OddPolynomial& a, const OddPolynomial& b, int cap) {
    OddPolynomial r;
    for (const auto& [ea, ca] : a.terms()) {
        int da = monomial_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (cap >= 0 && da + monomial_degree(eb) > cap) continue;
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
            for (std::size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

OddPolynomial OddPolynomial::pow(unsigned e) const {
    OddPolynomial r = constant(1);
    OddPolynomial b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

OddPolynomial OddPolynomial::truncated(int max_degree) const {
    OddPolynomial r;
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) <= max_degree) r.terms_.emplace(e, c);
    return r;
}

Rational OddPolynomial::eval(const std::map<int, Rational>& values) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            int sub = int(2 * j + 1);
            auto it = values.find(sub);
            if (it == values.end()) throw MissingGeneratorError(sub);
            term *= rational_pow(it->second, e[j]);
        }
        total += term;
    }
    return total;
}

std::vector<std::pair<Exponents, Rational>> OddPolynomial::leading_terms() const {
    std::vector<std::pair<Exponents, Rational>> out;
    if (terms_.empty()) return out;
    int d = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend() && monomial_degree(it->first) == d; ++it)
        out.emplace_back(it->first, it->second);
    return out;
}

std::string OddPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-c) : c;
        bool is_const = it->first.empty();
        if (mag != 1 || is_const) {
            os << format_rational(mag);
            if (!is_const) os << " ";
        }
        bool first_factor = true;
        for (std::size_t j = it->first.size(); j-- > 0;) {
            if (it->first[j] == 0) continue;
            if (!first_factor) os << " ";
            first_factor = false;
            os << "p" << 2 * j + 1;
            if (it->first[j] > 1) os << "^" << it->first[j];
        }
        first = false;
    }
    return os.str();
}

OddPolynomial poly_from_terms(
    const std::vector<std::pair<std::map<int, unsigned>, std::string>>& terms) {
    OddPolynomial p;
    for (const auto& [mono, coeff] : terms) {
        Exponents e;
        for (const auto& [sub, exp] : mono) {
            if (sub < 1 || sub % 2 == 0)
                throw std::invalid_argument("subscript must be odd: " + std::to_string(sub));
            std::size_t j = std::size_t((sub - 1) / 2);
            if (e.size() <= j) e.resize(j + 1, 0);
            e[j] = exp;
        }
        p.add_term(e, parse_rational(coeff));
    }
    return p;
}

}  // namespace spinkerov
