#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <spinkerov/kerov.hpp>
#include <spinkerov/measures.hpp>
#include <spinkerov/oracle.hpp>
#include <spinkerov/render.hpp>
#include <spinkerov/spin_functions.hpp>

namespace py = pybind11;
using namespace spinkerov;

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

StrictPartition strict(const std::vector<int>& parts) { return StrictPartition(parts); }
Partition plain(const std::vector<int>& parts) { return Partition(parts); }

py::dict kerov_dict(const KerovPolynomial& kp) { return to_py(kerov_to_json(kp)); }

}  // namespace

PYBIND11_MODULE(_spinkerov, m) {
    m.doc() = "Exact spin Kerov polynomial computations";
    m.attr("__version__") = kToolVersion;

    m.def(
        "spin_kerov",
        [](int k, const std::string& basis) {
            return kerov_dict(basis == "symmetrized" ? symmetrized_spin_kerov(k) : spin_kerov(k));
        },
        py::arg("k"), py::arg("basis") = "frak",
        "Spin Kerov polynomial for odd k as {family, terms}; coefficients are rational strings.");

    m.def(
        "ordinary_kerov", [](int k) { return kerov_dict(ordinary_kerov(k)); }, py::arg("k"),
        "Ordinary Kerov polynomial as {family, terms}.");

    m.def(
        "spin_kerov_text",
        [](int k, const std::string& basis) {
            return render_kerov_text(basis == "symmetrized" ? symmetrized_spin_kerov(k)
                                                            : spin_kerov(k));
        },
        py::arg("k"), py::arg("basis") = "frak");

    m.def(
        "spin_character",
        [](int k, const std::vector<int>& lam) {
            return format_rational(spin_character_eval(k, strict(lam)));
        },
        py::arg("k"), py::arg("partition"),
        "Normalized spin character at a strict partition, as a rational string.");

    m.def(
        "spin_cumulant",
        [](int two_k, const std::vector<int>& lam) {
            return format_rational(spin_free_cumulant_eval(two_k, strict(lam)));
        },
        py::arg("k"), py::arg("partition"));

    m.def(
        "symmetrized_cumulant",
        [](int k, const std::vector<int>& lam) {
            return format_rational(symmetrized_cumulant_eval(k, strict(lam)));
        },
        py::arg("k"), py::arg("partition"));

    m.def(
        "ordinary_character",
        [](int k, const std::vector<int>& lam) {
            return format_rational(ordinary_character_eval(k, plain(lam)));
        },
        py::arg("k"), py::arg("partition"));

    m.def(
        "free_cumulant",
        [](int k, const std::vector<int>& mu) {
            return format_rational(biane_cumulant(plain(mu), k));
        },
        py::arg("k"), py::arg("partition"));

    m.def(
        "transition_moment",
        [](int k, const std::vector<int>& mu) {
            return format_rational(transition_moments(plain(mu), k).back());
        },
        py::arg("k"), py::arg("partition"));

    m.def(
        "character_table",
        [](int n) {
            auto table = oracle::character_table(n);
            py::dict values, dims;
            for (const auto& [key, v] : table.values) {
                const auto& [lam, rho] = key;
                values[py::make_tuple(py::tuple(py::cast(lam.parts())),
                                      py::tuple(py::cast(rho.parts())))] =
                    py::int_(py::str(v.get_str()));
            }
            for (const auto& [lam, g] : table.dimensions)
                dims[py::tuple(py::cast(lam.parts()))] = py::int_(py::str(g.get_str()));
            py::dict out;
            out["n"] = n;
            out["values"] = values;
            out["dims"] = dims;
            return out;
        },
        py::arg("n"), "Brute-force spin character table for partitions of n.");

    m.def(
        "positivity",
        [](int max_k, const std::string& family) {
            py::list out;
            for (const auto& rec : positivity_report(max_k, parse_family(family))) {
                py::dict d;
                d["k"] = rec.k;
                d["all_nonnegative"] = rec.all_nonnegative;
                d["all_integers"] = rec.all_integers;
                py::list off;
                for (const auto& [mono, c] : rec.offending)
                    off.append(py::make_tuple(py::cast(mono), format_rational(c)));
                d["offending"] = off;
                out.append(d);
            }
            return out;
        },
        py::arg("max_k"), py::arg("family") = "spin",
        "Positivity/integrality records for odd k up to max_k.");
}
