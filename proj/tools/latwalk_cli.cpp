// latwalk: exact enumeration of directed lattice paths (walks, bridges,
// meanders, excursions, strictly positive walks) with kernel-method
// generating functions, closed-form coefficient formulas, a holonomic
// recurrence fast path, asymptotic checks, and a cross-validation
// harness over bundled OEIS fixtures.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latwalk/asymptotics.hpp"
#include "latwalk/fixtures.hpp"
#include "latwalk/formulas.hpp"
#include "latwalk/kernel.hpp"
#include "latwalk/links.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/recurrences.hpp"

using json = nlohmann::ordered_json;
using namespace latwalk;

namespace {

struct CommonOpts {
    std::string format = "plain";
};

void emit_values(const CommonOpts& common, const std::vector<std::pair<long, std::string>>& rows) {
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& [n, v] : rows) arr.push_back({{"n", n}, {"value", v}});
        std::cout << arr.dump() << "\n";
    } else if (common.format == "csv") {
        std::cout << "n,value\n";
        for (const auto& [n, v] : rows) std::cout << n << "," << v << "\n";
    } else {
        for (const auto& [n, v] : rows) std::cout << n << " " << v << "\n";
    }
}

void emit_scalar(const CommonOpts& common, const std::string& v) {
    if (common.format == "json") std::cout << json{{"value", v}}.dump() << "\n";
    else if (common.format == "csv") std::cout << "value\n" << v << "\n";
    else std::cout << v << "\n";
}

std::vector<Rational> parse_params(const std::string& csv) {
    std::vector<Rational> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

std::vector<long> parse_steps(const std::string& csv) {
    std::vector<long> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of directed lattice paths"};
    // --h is a data option below, so drop the default -h help alias.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    CommonOpts common;

    std::string family = "basketball", cls = "excursion", to = "0", id, action, tree_text,
                path_text, params_text;
    long h = 2, n = 0, max_n = -1, from = 0, k = 0, m = 2, d = 2;
    bool bench = false, avoid213 = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "plain, json, or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };
    auto sub = [&](const char* name, const char* desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print this help message and exit");
        return cmd;
    };

    auto* c_count = sub("count", "count walks with the DP oracle");
    c_count->add_option("--family", family, "step-set family");
    c_count->add_option("--h", h, "family size parameter");
    c_count->add_option("--n", n, "walk length");
    c_count->add_option("--max-n", max_n, "emit the whole sequence 0..max-n");
    c_count->add_option("--from", from, "start altitude");
    c_count->add_option("--to", to, "end altitude, or 'any'");
    c_count->add_option("--class", cls,
                        "walk, bridge, meander, excursion, or strictly_positive");
    c_count->add_option("--params", params_text, "weights for weighted families, e.g. 1,2,1");
    add_common(c_count);

    auto* c_series = sub("series", "kernel-method generating function coefficients");
    c_series->add_option("--id", id,
                         "excursion, positive_walk, positive_meander, gjk, w, or root")
        ->required();
    c_series->add_option("--family", family, "step-set family");
    c_series->add_option("--h", h, "family size parameter");
    c_series->add_option("--max-n", max_n, "truncation order")->required();
    c_series->add_option("--from", from, "start altitude j (gjk)");
    c_series->add_option("--to", to, "end altitude k (positive_walk, gjk, w)");
    add_common(c_series);

    auto* c_formula = sub("formula", "closed-form coefficient formulas");
    c_formula->add_option("--id", id,
                          "g01, g02, excursion, mnomial, mock_mnomial, unconstrained, "
                          "general_positive, general_meander, table2")
        ->required();
    c_formula->add_option("--family", family, "family for the general/table formulas");
    c_formula->add_option("--h", h, "family size parameter");
    c_formula->add_option("--n", n, "walk length / upper index");
    c_formula->add_option("--to", to, "end altitude k");
    c_formula->add_option("--k", k, "lower index for the coefficient formulas");
    c_formula->add_option("--m", m, "m-nomial modulus");
    c_formula->add_option("--d", d, "arity for the table families");
    c_formula->add_option("--params", params_text, "weights for weighted_motzkin");
    add_common(c_formula);

    auto* c_recur = sub("recur", "holonomic recurrence for basketball walks to 1");
    c_recur->add_option("--n", n, "target index")->required();
    c_recur->add_flag("--bench", bench, "time the recurrence against the DP oracle");
    add_common(c_recur);

    auto* c_asym = sub("asym", "asymptotic approximation vs exact value");
    c_asym->add_option("--id", id, "g01 or g02")->required();
    c_asym->add_option("--n", n, "index")->required();
    add_common(c_asym);

    auto* c_links = sub("links", "related combinatorial structures");
    c_links->add_option("--action", action, "tree2path, path2tree, absorb, trees, brackets")
        ->required();
    c_links->add_option("--tree", tree_text, "tree as nested parentheses");
    c_links->add_option("--path", path_text, "comma-separated jumps");
    c_links->add_option("--n", n, "size");
    c_links->add_option("--m", m, "step-set id for absorb (2, 3, or 4)");
    c_links->add_flag("--avoid213", avoid213, "only 213-avoiding trees");
    add_common(c_links);

    auto* c_verify = sub("verify", "cross-validation harness");
    c_verify->add_option("--family", family, "restrict to one family");
    c_verify->add_option("--h", h, "family size parameter");
    c_verify->add_option("--max-n", max_n, "length bound for the cross-checks");
    bool family_given = false;
    c_verify->parse_complete_callback([&] { family_given = c_verify->count("--family") > 0; });
    add_common(c_verify);

    auto* c_fixtures = sub("fixtures", "bundled reference sequences");
    c_fixtures->add_option("--id", id, "print one fixture's values");
    add_common(c_fixtures);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_count) {
            StepSet steps = make_family(family, h, parse_params(params_text));
            auto one = [&](long len) -> Rational {
                if (to == "any") return oracle::meander_total(steps, len);
                return oracle::count({steps, len, from, std::stol(to), parse_constraint(cls)});
            };
            if (max_n >= 0) {
                std::vector<std::pair<long, std::string>> rows;
                for (long i = 0; i <= max_n; ++i) rows.emplace_back(i, to_string(one(i)));
                emit_values(common, rows);
            } else {
                emit_scalar(common, to_string(one(n)));
            }
        } else if (*c_series) {
            StepSet steps = make_family(family, h);
            const long kk = to == "any" ? 0 : std::stol(to);
            const long span = steps.down_span();
            int order = static_cast<int>(span * (max_n + std::max<long>(from, kk) + 4));
            KernelRoots roots = solve_distinguished_root(steps, order);
            RationalSeries s;
            if (id == "excursion") s = excursion_gf(roots, static_cast<int>(max_n));
            else if (id == "positive_walk") s = positive_walk_gf(roots, kk, static_cast<int>(max_n));
            else if (id == "positive_meander") s = positive_meander_gf(roots, static_cast<int>(max_n));
            else if (id == "gjk") s = basketball_gjk(roots, from, kk, static_cast<int>(max_n));
            else if (id == "w") s = basketball_w(roots, kk, static_cast<int>(max_n));
            else if (id == "root") s = roots.U.truncated(static_cast<int>(max_n));
            else throw CLI::ValidationError("--id", "unknown series id: " + id);
            std::vector<std::pair<long, std::string>> rows;
            for (int i = 0; i <= s.order; ++i) rows.emplace_back(i, to_string(s.c[i]));
            emit_values(common, rows);
        } else if (*c_formula) {
            const long kk = to == "any" ? 1 : std::stol(to);
            std::string v;
            if (id == "g01") v = formulas::basketball_g01(n).get_str();
            else if (id == "g02") v = formulas::basketball_g02(n).get_str();
            else if (id == "excursion") v = formulas::basketball_excursion(n).get_str();
            else if (id == "mnomial") v = formulas::mnomial(n, k, m).get_str();
            else if (id == "mock_mnomial") v = formulas::mock_mnomial(n, k, m).get_str();
            else if (id == "unconstrained")
                v = formulas::unconstrained_count(family, h, n, kk).get_str();
            else if (id == "general_positive")
                v = formulas::general_positive_count(family, h, n, kk).get_str();
            else if (id == "general_meander")
                v = formulas::general_positive_meander_count(family, h, n).get_str();
            else if (id == "table2")
                v = to_string(formulas::table2_excursions(family, d, parse_params(params_text), n));
            else throw CLI::ValidationError("--id", "unknown formula id: " + id);
            emit_scalar(common, v);
        } else if (*c_recur) {
            if (bench) {
                recurrences::BenchmarkResult r = recurrences::benchmark(n);
                json out{{"n", n},
                         {"value", r.value.get_str()},
                         {"recurrence_seconds", r.recurrence_seconds},
                         {"dp_seconds", r.dp_seconds}};
                std::cout << out.dump() << "\n";
            } else {
                emit_scalar(common, recurrences::eval_recurrence(
                                        recurrences::basketball_g01_recurrence(), n)
                                        .get_str());
            }
        } else if (*c_asym) {
            asymptotics::AsymptoticForm form = id == "g01" ? asymptotics::basketball_g01_form()
                                              : id == "g02"
                                                  ? asymptotics::basketball_g02_form()
                                                  : throw CLI::ValidationError(
                                                        "--id", "unknown asymptotic form: " + id);
            Integer exact =
                id == "g01"
                    ? recurrences::eval_recurrence(recurrences::basketball_g01_recurrence(), n)
                    : formulas::basketball_g02(n);
            json out{{"n", n},
                     {"exact", exact.get_str()},
                     {"asymptotic", asymptotics::evaluate(form, n).str()},
                     {"relative_error", asymptotics::relative_error(form, n, exact).str()}};
            std::cout << out.dump() << "\n";
        } else if (*c_links) {
            if (action == "tree2path") {
                std::vector<long> steps = links::luka_tree_to_path(links::parse_tree(tree_text));
                std::string s;
                for (size_t i = 0; i < steps.size(); ++i)
                    s += (i ? "," : "") + std::to_string(steps[i]);
                emit_scalar(common, s);
            } else if (action == "path2tree") {
                emit_scalar(common, links::tree_to_string(links::luka_path_to_tree(
                                        path_text.empty() ? std::vector<long>{}
                                                          : parse_steps(path_text))));
            } else if (action == "absorb") {
                emit_scalar(common, links::absorption_walk_count(m, n).get_str());
            } else if (action == "trees") {
                emit_scalar(common,
                            std::to_string(links::increasing_unary_binary(n, avoid213)));
            } else if (action == "brackets") {
                links::BracketingCounts bc = links::bracketing_counts(n);
                std::vector<std::pair<long, std::string>> rows;
                for (long i = 1; i <= n; ++i)
                    rows.emplace_back(i, bc.zeros[i].get_str() + " " + bc.ones[i].get_str());
                emit_values(common, rows);
            } else {
                throw CLI::ValidationError("--action", "unknown action: " + action);
            }
        } else if (*c_verify) {
            fixtures::VerifyReport report;
            if (family_given) {
                report = fixtures::verify_family(family, h, max_n < 0 ? 15 : max_n, 2);
            } else {
                report = fixtures::verify_default(fixtures::default_fixture_dir(),
                                                  max_n < 0 ? 15 : max_n);
            }
            json out{{"checks", report.checks}, {"passes", report.passes}};
            json fails = json::array();
            for (const auto& f : report.failures)
                fails.push_back({{"query", f.query}, {"expected", f.expected}, {"got", f.got}});
            out["failures"] = fails;
            std::cout << out.dump(2) << "\n";
            if (!report.ok()) return 2;
        } else if (*c_fixtures) {
            std::vector<fixtures::Fixture> all =
                fixtures::load_fixture_dir(fixtures::default_fixture_dir());
            if (!id.empty()) {
                for (const auto& f : all)
                    if (f.name == id) {
                        emit_values(common, f.values);
                        return 0;
                    }
                std::cerr << "no fixture named " << id << "\n";
                return 1;
            }
            if (common.format == "json") {
                json arr = json::array();
                for (const auto& f : all)
                    arr.push_back({{"name", f.name},
                                   {"source", f.source},
                                   {"terms", f.values.size()}});
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& f : all)
                    std::cout << f.name << "  [" << f.values.size() << " terms]  " << f.source
                              << "\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
