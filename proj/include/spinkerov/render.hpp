#pragma once

#include <spinkerov/kerov.hpp>
#include <spinkerov/polynomial.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace spinkerov {

enum class OutputFormat { Text, Json, Latex };

OutputFormat parse_format(const std::string& s);

// Display order: weight-descending, ties broken lexicographically from the
// largest subscript (matches the published layout of the polynomials).
std::vector<std::pair<GeneratorMonomial, Rational>> sorted_terms(const KerovPolynomial& kp);

// "R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + ..." (symmetrized family renders as T2, T4, ...).
std::string render_kerov_text(const KerovPolynomial& kp);
std::string render_kerov_latex(const KerovPolynomial& kp);
nlohmann::json kerov_to_json(const KerovPolynomial& kp);
KerovPolynomial kerov_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const OddPolynomial& p);
OddPolynomial poly_from_json(const nlohmann::json& j);
std::string render_poly_latex(const OddPolynomial& p);

std::string family_name(CumulantFamily family);
CumulantFamily parse_family(const std::string& s);

// Deterministic CLI result wrapper.
nlohmann::json output_envelope(const std::string& command, const nlohmann::json& parameters,
                               const nlohmann::json& result);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace spinkerov
