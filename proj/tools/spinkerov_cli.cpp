#include <spinkerov/kerov.hpp>
#include <spinkerov/measures.hpp>
#include <spinkerov/oracle.hpp>
#include <spinkerov/render.hpp>
#include <spinkerov/spin_functions.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <string>

namespace {

using namespace spinkerov;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFinding = 3;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int degree_cap() {
    if (const char* env = std::getenv("SPINKEROV_MAX_K")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 21;
}

void check_k_cap(int k) {
    int cap = degree_cap();
    if (k > cap)
        throw UsageError("k=" + std::to_string(k) + " exceeds the configured cap " +
                         std::to_string(cap) + " (set SPINKEROV_MAX_K to raise it)");
    if (k > 21)
        std::cerr << "warning: k=" << k
                  << " may need substantial memory and time for exact arithmetic\n";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open output file " + out_path);
        os << text << "\n";
    }
}

std::string rendered(const KerovPolynomial& kp, OutputFormat format, const std::string& command,
                     const nlohmann::json& params) {
    switch (format) {
        case OutputFormat::Text: return render_kerov_text(kp);
        case OutputFormat::Latex: return render_kerov_latex(kp);
        case OutputFormat::Json:
            return output_envelope(command, params, kerov_to_json(kp)).dump();
    }
    throw std::logic_error("unreachable");
}

Partition partition_arg(const std::string& text) {
    try {
        return Partition(parse_parts(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --partition: ") + e.what());
    }
}

StrictPartition strict_partition_arg(const std::string& text) {
    try {
        return StrictPartition(parse_parts(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --partition (strict expected): ") + e.what());
    }
}

int run_spin_kerov(int k, const std::string& basis, OutputFormat format,
                   const std::string& out_path) {
    if (k < 1 || k % 2 == 0) throw UsageError("spin-kerov requires odd k >= 1");
    check_k_cap(k);
    KerovPolynomial kp = basis == "symmetrized" ? symmetrized_spin_kerov(k) : spin_kerov(k);
    emit(rendered(kp, format, "spin-kerov", {{"k", k}, {"basis", basis}}), out_path);
    return kExitOk;
}

int run_ordinary_kerov(int k, OutputFormat format, const std::string& out_path) {
    if (k < 1) throw UsageError("kerov requires k >= 1");
    check_k_cap(k);
    emit(rendered(ordinary_kerov(k), format, "kerov", {{"k", k}}), out_path);
    return kExitOk;
}

int run_check(int max_k, const std::string& family_str, bool parallel, OutputFormat format,
              const std::string& out_path) {
    if (max_k < 1) throw UsageError("check requires max-k >= 1");
    if (max_k % 2 == 0) --max_k;
    check_k_cap(max_k);
    CumulantFamily family = parse_family(family_str);
    if (family == CumulantFamily::Ordinary)
        throw UsageError("check covers the spin and symmetrized families");

    std::vector<int> ks;
    for (int k = 1; k <= max_k; k += 2) ks.push_back(k);
    std::vector<KerovPolynomial> polys(ks.size());
    auto compute = [&](std::size_t i) {
        polys[i] = family == CumulantFamily::Spin ? spin_kerov(ks[i])
                                                  : symmetrized_spin_kerov(ks[i]);
    };
    if (parallel) {
        std::vector<std::future<void>> futs;
        for (std::size_t i = 0; i < ks.size(); ++i)
            futs.push_back(std::async(std::launch::async, compute, i));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            std::cerr << "computing k=" << ks[i] << "\n";
            compute(i);
        }
    }

    bool finding = false;
    nlohmann::json records = nlohmann::json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        int k = ks[i];
        const KerovPolynomial& kp = polys[i];
        // The k <= 9 spin expansions are pinned regression values.
        if (family == CumulantFamily::Spin && k <= 9) {
            if (!(kp == known_spin_kerov().at(k)))
                throw std::runtime_error("computed spin polynomial for k=" + std::to_string(k) +
                                         " deviates from the verified reference table");
        }
        bool nonneg = true, integral = true;
        nlohmann::json offending = nlohmann::json::array();
        for (const auto& [mono, c] : sorted_terms(kp)) {
            if (c >= 0 && is_integer(c)) continue;
            if (c < 0) nonneg = false;
            if (!is_integer(c)) integral = false;
            KerovPolynomial one{kp.family, {{mono, 1}}};
            offending.push_back({{"monomial", render_kerov_text(one)},
                                 {"coeff", format_rational(c)}});
        }
        if (!nonneg || !integral) finding = true;
        records.push_back({{"k", k},
                           {"allNonnegative", nonneg},
                           {"allIntegers", integral},
                           {"offending", offending},
                           {"beyondVerifiedRange", family == CumulantFamily::Spin && k > 9}});
        text << "k=" << k << ": "
             << (nonneg && integral ? "all nonnegative integers"
                                    : (!integral ? "NON-INTEGER coefficients present"
                                                 : "NEGATIVE coefficients present"));
        if (family == CumulantFamily::Spin && k > 9) text << " (beyond the pinned reference range)";
        if (!offending.empty()) {
            text << " [";
            for (std::size_t t = 0; t < offending.size(); ++t) {
                if (t) text << ", ";
                text << offending[t]["monomial"].get<std::string>() << ": "
                     << offending[t]["coeff"].get<std::string>();
            }
            text << "]";
        }
        text << "\n";
    }
    std::string body;
    if (format == OutputFormat::Json) {
        body = output_envelope("check",
                               {{"family", family_str}, {"maxK", max_k}},
                               records)
                   .dump();
    } else {
        std::string t = text.str();
        if (!t.empty() && t.back() == '\n') t.pop_back();
        body = t;
    }
    emit(body, out_path);
    return finding ? kExitFinding : kExitOk;
}

int run_eval(const std::string& function, int k, const std::string& partition_text,
             const std::string& out_path) {
    Rational value;
    if (function == "spin-char") {
        if (k % 2 == 0) throw UsageError("spin-char requires odd k");
        value = spin_character_eval(k, strict_partition_arg(partition_text));
    } else if (function == "spin-cumulant") {
        if (k % 2 == 1 || k < 2) throw UsageError("spin-cumulant requires even k >= 2");
        value = spin_free_cumulant_eval(k, strict_partition_arg(partition_text));
    } else if (function == "symmetrized-cumulant") {
        if (k < 2) throw UsageError("symmetrized-cumulant requires k >= 2");
        value = symmetrized_cumulant_eval(k, strict_partition_arg(partition_text));
    } else if (function == "ordinary-char") {
        if (k < 1) throw UsageError("ordinary-char requires k >= 1");
        value = ordinary_character_eval(k, partition_arg(partition_text));
    } else if (function == "free-cumulant") {
        if (k < 2) throw UsageError("free-cumulant requires k >= 2");
        value = biane_cumulant(partition_arg(partition_text), k);
    } else if (function == "moment") {
        if (k < 1) throw UsageError("moment requires k >= 1");
        value = transition_moments(partition_arg(partition_text), k).back();
    } else {
        throw UsageError("unknown function '" + function + "'");
    }
    emit(format_rational(value), out_path);
    return kExitOk;
}

int run_compare(int k, OutputFormat format, const std::string& out_path) {
    if (k < 3 || k % 2 == 0) throw UsageError("compare requires odd k >= 3");
    check_k_cap(k);
    ComparisonReport rep = coincidence_report(k);
    if (format == OutputFormat::Json) {
        nlohmann::json linear = nlohmann::json::array();
        for (const auto& lm : rep.linear_matches)
            linear.push_back({{"subscript", lm.subscript},
                              {"ordinary", format_rational(lm.ordinary)},
                              {"spin", format_rational(lm.spin)},
                              {"match", lm.match}});
        nlohmann::json ratios = nlohmann::json::array();
        for (const auto& tr : rep.top_degree_ratios) {
            nlohmann::json exps = nlohmann::json::object();
            for (const auto& [sub, e] : tr.monomial) exps[std::to_string(sub)] = e;
            ratios.push_back({{"exponents", exps},
                              {"spin", format_rational(tr.spin)},
                              {"ordinary", format_rational(tr.ordinary)},
                              {"predictedFactor", format_rational(tr.predicted_factor)},
                              {"ratioMatch", tr.ratio_match}});
        }
        emit(output_envelope("compare", {{"k", k}},
                             {{"linearMatches", linear}, {"topDegreeRatios", ratios}})
                 .dump(),
             out_path);
        return kExitOk;
    }
    std::ostringstream os;
    os << "linear coefficients (ordinary vs spin):\n";
    for (const auto& lm : rep.linear_matches)
        os << "  subscript " << lm.subscript << ": " << format_rational(lm.ordinary) << " vs "
           << format_rational(lm.spin) << (lm.match ? "  match" : "  MISMATCH") << "\n";
    os << "top-degree monomials (weight " << k - 1 << "):\n";
    for (const auto& tr : rep.top_degree_ratios) {
        KerovPolynomial one{CumulantFamily::Spin, {{tr.monomial, 1}}};
        os << "  " << render_kerov_text(one) << ": spin " << format_rational(tr.spin)
           << " = " << format_rational(tr.predicted_factor) << " * ordinary "
           << format_rational(tr.ordinary)
           << (tr.ratio_match ? "  match" : "  MISMATCH") << "\n";
    }
    std::string t = os.str();
    t.pop_back();
    emit(t, out_path);
    return kExitOk;
}

int run_oracle(int n, const std::string& out_path) {
    if (n < 1) throw UsageError("oracle requires n >= 1");
    oracle::SpinCharacterTable table = oracle::character_table(n);
    nlohmann::json rows = nlohmann::json::array();
    for (const StrictPartition& lam : enumerate_strict(n)) {
        nlohmann::json values = nlohmann::json::object();
        for (const OddPartition& rho : enumerate_odd(n)) {
            Integer v = table.values.at({lam, rho});
            values[rho.to_string()] = nlohmann::json::parse(v.get_str());
        }
        rows.push_back({{"lambda", lam.parts()}, {"values", values}});
    }
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [lam, g] : table.dimensions)
        dims[lam.to_string()] = nlohmann::json::parse(g.get_str());
    emit(output_envelope("oracle", {{"n", n}},
                         {{"n", n}, {"rows", rows}, {"dims", dims}})
             .dump(),
         out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for spin Kerov polynomials"};
    app.require_subcommand(1);

    int k = 0, max_k = 13, n = 0;
    std::string basis = "frak", family = "spin", function, partition_text, format_str = "text",
                out_path;
    bool parallel = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "Output format: text|json|latex");
        cmd->add_option("--out", out_path, "Write the result to a file instead of stdout");
    };

    CLI::App* sk = app.add_subcommand("spin-kerov", "Spin Kerov polynomial for odd k");
    sk->add_option("--k", k, "Odd subscript of the spin character")->required();
    sk->add_option("--basis", basis, "Cumulant family: frak|symmetrized")
        ->check(CLI::IsMember({"frak", "symmetrized"}));
    add_common(sk);

    CLI::App* ok = app.add_subcommand("kerov", "Ordinary Kerov polynomial");
    ok->add_option("--k", k, "Subscript of the normalized character")->required();
    add_common(ok);

    CLI::App* ch = app.add_subcommand("check", "Positivity/integrality sweep");
    ch->add_option("--max-k", max_k, "Largest odd k in the sweep");
    ch->add_option("--family", family, "spin|symmetrized")
        ->check(CLI::IsMember({"spin", "symmetrized"}));
    ch->add_flag("--parallel", parallel, "Fan the per-k work across a task pool");
    add_common(ch);

    CLI::App* ev = app.add_subcommand("eval", "Evaluate one function at a partition");
    ev->add_option("--function", function,
                   "spin-char|spin-cumulant|symmetrized-cumulant|ordinary-char|free-cumulant|moment")
        ->required();
    ev->add_option("--k", k, "Subscript")->required();
    ev->add_option("--partition", partition_text, "Comma-separated parts; empty for the empty partition");
    add_common(ev);

    CLI::App* cp = app.add_subcommand("compare", "Ordinary/spin coefficient comparison");
    cp->add_option("--k", k, "Odd k >= 3")->required();
    add_common(cp);

    CLI::App* orc = app.add_subcommand("oracle", "Dump the brute-force spin character table");
    orc->add_option("--n", n, "Size of the partitions")->required();
    add_common(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        OutputFormat format = parse_format(format_str);
        if (sk->parsed()) return run_spin_kerov(k, basis, format, out_path);
        if (ok->parsed()) return run_ordinary_kerov(k, format, out_path);
        if (ch->parsed()) return run_check(max_k, family, parallel, format, out_path);
        if (ev->parsed()) return run_eval(function, k, partition_text, out_path);
        if (cp->parsed()) return run_compare(k, format, out_path);
        if (orc->parsed()) return run_oracle(n, out_path);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
