#include <spinkerov/render.hpp>

#include <algorithm>
#include <sstream>

namespace spinkerov {

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format '" + s + "' (expected text|json|latex)");
}

std::string family_name(CumulantFamily family) {
    switch (family) {
        case CumulantFamily::Ordinary: return "ordinary";
        case CumulantFamily::Spin: return "spin";
        case CumulantFamily::Symmetrized: return "symmetrized";
    }
    throw std::logic_error("unreachable");
}

CumulantFamily parse_family(const std::string& s) {
    if (s == "ordinary") return CumulantFamily::Ordinary;
    if (s == "spin") return CumulantFamily::Spin;
    if (s == "symmetrized") return CumulantFamily::Symmetrized;
    throw std::invalid_argument("unknown family '" + s + "'");
}

namespace {

// Ties within a weight layer: larger exponent on the larger subscript first.
bool monomial_display_less(const GeneratorMonomial& a, const GeneratorMonomial& b) {
    int wa = generator_monomial_weight(a), wb = generator_monomial_weight(b);
    if (wa != wb) return wa > wb;
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
        if (ia->first != ib->first) return ia->first > ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.rend();
}

std::string generator_symbol(CumulantFamily family) {
    return family == CumulantFamily::Symmetrized ? "T" : "R";
}

}  // namespace

std::vector<std::pair<GeneratorMonomial, Rational>> sorted_terms(const KerovPolynomial& kp) {
    std::vector<std::pair<GeneratorMonomial, Rational>> out(kp.terms.begin(), kp.terms.end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return monomial_display_less(x.first, y.first); });
    return out;
}

std::string render_kerov_text(const KerovPolynomial& kp) {
    auto terms = sorted_terms(kp);
    if (terms.empty()) return "0";
    std::ostringstream os;
    const std::string sym = generator_symbol(kp.family);
    bool first = true;
    for (const auto& [mono, c] : terms) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-c) : c;
        if (mag != 1 || mono.empty()) {
            os << format_rational(mag);
            if (!mono.empty()) os << " ";
        }
        bool first_factor = true;
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
            if (!first_factor) os << " ";
            first_factor = false;
            os << sym << it->first;
            if (it->second > 1) os << "^" << it->second;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::string latex_rational(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    std::string sign = q < 0 ? "-" : "";
    Rational mag = q < 0 ? Rational(-q) : q;
    return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

std::string latex_generator(CumulantFamily family, int sub) {
    switch (family) {
        case CumulantFamily::Ordinary: return "R_{" + std::to_string(sub) + "}";
        case CumulantFamily::Spin: return "\\mathfrak{R}_{" + std::to_string(sub) + "}";
        case CumulantFamily::Symmetrized: return "\\mathtt{R}_{" + std::to_string(sub) + "}";
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string render_kerov_latex(const KerovPolynomial& kp) {
    auto terms = sorted_terms(kp);
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-c) : c;
        bool printed = false;
        if (mag != 1 || mono.empty()) {
            os << latex_rational(mag);
            printed = true;
        }
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
            if (printed) os << " ";
            printed = true;
            os << latex_generator(kp.family, it->first);
            if (it->second > 1) os << "^{" << it->second << "}";
        }
        first = false;
    }
    return os.str();
}

nlohmann::json kerov_to_json(const KerovPolynomial& kp) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : sorted_terms(kp)) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [sub, e] : mono) exps[std::to_string(sub)] = e;
        terms.push_back({{"exponents", exps}, {"coeff", format_rational(c)}});
    }
    return {{"family", family_name(kp.family)}, {"terms", terms}};
}

KerovPolynomial kerov_from_json(const nlohmann::json& j) {
    KerovPolynomial kp;
    kp.family = parse_family(j.at("family").get<std::string>());
    for (const auto& term : j.at("terms")) {
        GeneratorMonomial mono;
        for (const auto& [key, val] : term.at("exponents").items())
            mono[std::stoi(key)] = val.get<unsigned>();
        Rational c = parse_rational(term.at("coeff").get<std::string>());
        if (c != 0) kp.terms[mono] += c;
    }
    return kp;
}

nlohmann::json poly_to_json(const OddPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    // Degree-descending for readability; the map order is graded ascending.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json exps = nlohmann::json::object();
        for (std::size_t j = 0; j < it->first.size(); ++j)
            if (it->first[j] > 0) exps[std::to_string(2 * j + 1)] = it->first[j];
        terms.push_back({{"exponents", exps}, {"coeff", format_rational(it->second)}});
    }
    return terms;
}

OddPolynomial poly_from_json(const nlohmann::json& j) {
    OddPolynomial p;
    for (const auto& term : j) {
        Exponents e;
        for (const auto& [key, val] : term.at("exponents").items()) {
            int sub = std::stoi(key);
            std::size_t idx = std::size_t((sub - 1) / 2);
            if (e.size() <= idx) e.resize(idx + 1, 0);
            e[idx] = val.get<unsigned>();
        }
        p.add_term(e, parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

std::string render_poly_latex(const OddPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        bool neg = it->second < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-it->second) : it->second;
        bool printed = false;
        bool empty_mono = it->first.empty() ||
                          std::all_of(it->first.begin(), it->first.end(),
                                      [](unsigned e) { return e == 0; });
        if (mag != 1 || empty_mono) {
            os << latex_rational(mag);
            printed = true;
        }
        for (std::size_t j = it->first.size(); j-- > 0;) {
            if (it->first[j] == 0) continue;
            if (printed) os << " ";
            printed = true;
            os << "p_{" << 2 * j + 1 << "}";
            if (it->first[j] > 1) os << "^{" << it->first[j] << "}";
        }
        first = false;
    }
    return os.str();
}

nlohmann::json output_envelope(const std::string& command, const nlohmann::json& parameters,
                               const nlohmann::json& result) {
    return {{"command", command},
            {"parameters", parameters},
            {"result", result},
            {"toolVersion", kToolVersion}};
}

}  // namespace spinkerov
