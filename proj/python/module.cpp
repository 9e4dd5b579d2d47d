// Python bindings for the main latwalk operations. All exact values
// cross the boundary as decimal strings (Python ints/Fractions are easy
// to reconstruct and nothing is truncated).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latwalk/asymptotics.hpp"
#include "latwalk/fixtures.hpp"
#include "latwalk/formulas.hpp"
#include "latwalk/kernel.hpp"
#include "latwalk/links.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/recurrences.hpp"

namespace py = pybind11;
using namespace latwalk;

namespace {

StepSet family(const std::string& name, long h, const std::vector<std::string>& params) {
    std::vector<Rational> weights;
    for (const auto& p : params) weights.push_back(parse_rational(p));
    return make_family(name, h, weights);
}

std::vector<std::string> series_strings(const RationalSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.c) out.push_back(to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_latwalk, mod) {
    mod.doc() = "exact enumeration of directed lattice paths";

    mod.def(
        "count",
        [](const std::string& fam, long h, long n, long from, long to, const std::string& cls,
           const std::vector<std::string>& params) {
            StepSet steps = family(fam, h, params);
            return to_string(oracle::count({steps, n, from, to, parse_constraint(cls)}));
        },
        py::arg("family"), py::arg("h"), py::arg("n"), py::arg("from_alt") = 0,
        py::arg("to_alt") = 0, py::arg("walk_class") = "excursion",
        py::arg("params") = std::vector<std::string>{},
        "Exact weighted count of walks, as a decimal string.");

    mod.def(
        "meander_total",
        [](const std::string& fam, long h, long n) {
            return to_string(oracle::meander_total(family(fam, h, {}), n));
        },
        py::arg("family"), py::arg("h"), py::arg("n"));

    mod.def(
        "series",
        [](const std::string& id, const std::string& fam, long h, long n_max, long j, long k) {
            StepSet steps = family(fam, h, {});
            int order =
                static_cast<int>(steps.down_span() * (n_max + std::max<long>(j, k) + 4));
            KernelRoots roots = solve_distinguished_root(steps, order);
            RationalSeries s;
            if (id == "excursion") s = excursion_gf(roots, static_cast<int>(n_max));
            else if (id == "positive_walk") s = positive_walk_gf(roots, k, static_cast<int>(n_max));
            else if (id == "positive_meander")
                s = positive_meander_gf(roots, static_cast<int>(n_max));
            else if (id == "gjk") s = basketball_gjk(roots, j, k, static_cast<int>(n_max));
            else if (id == "w") s = basketball_w(roots, k, static_cast<int>(n_max));
            else if (id == "root") s = roots.U.truncated(static_cast<int>(n_max));
            else throw std::invalid_argument("unknown series id: " + id);
            return series_strings(s);
        },
        py::arg("id"), py::arg("family"), py::arg("h"), py::arg("n_max"), py::arg("j") = 0,
        py::arg("k") = 0, "Generating-function coefficients as decimal strings.");

    mod.def("basketball_g01", [](long n) { return formulas::basketball_g01(n).get_str(); });
    mod.def("basketball_g02", [](long n) { return formulas::basketball_g02(n).get_str(); });
    mod.def("basketball_excursion",
            [](long n) { return formulas::basketball_excursion(n).get_str(); });
    mod.def("mnomial", [](long n, long k, long m) { return formulas::mnomial(n, k, m).get_str(); });
    mod.def("mock_mnomial",
            [](long n, long k, long m) { return formulas::mock_mnomial(n, k, m).get_str(); });
    mod.def("general_positive_count", [](const std::string& fam, long h, long n, long k) {
        return formulas::general_positive_count(fam, h, n, k).get_str();
    });
    mod.def("general_positive_meander_count", [](const std::string& fam, long h, long n) {
        return formulas::general_positive_meander_count(fam, h, n).get_str();
    });

    mod.def("g01_recurrence", [](long n) {
        return recurrences::eval_recurrence(recurrences::basketball_g01_recurrence(), n).get_str();
    });

    mod.def(
        "asymptotic",
        [](const std::string& id, long n) {
            asymptotics::AsymptoticForm form =
                id == "g01" ? asymptotics::basketball_g01_form() : asymptotics::basketball_g02_form();
            return asymptotics::evaluate(form, n).str();
        },
        py::arg("id"), py::arg("n"));

    mod.def("increasing_unary_binary", &links::increasing_unary_binary, py::arg("n"),
            py::arg("avoid213"));
    mod.def("absorption_walk_count",
            [](long m, long n) { return links::absorption_walk_count(m, n).get_str(); });

    mod.def(
        "verify_fixtures",
        [](const std::string& dir) {
            fixtures::VerifyReport r =
                fixtures::verify_fixtures(dir.empty() ? fixtures::default_fixture_dir() : dir);
            py::dict out;
            out["checks"] = r.checks;
            out["passes"] = r.passes;
            py::list fails;
            for (const auto& f : r.failures) {
                py::dict d;
                d["query"] = f.query;
                d["expected"] = f.expected;
                d["got"] = f.got;
                fails.append(d);
            }
            out["failures"] = fails;
            return out;
        },
        py::arg("dir") = std::string());
}
