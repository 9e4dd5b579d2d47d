#include "latwalk/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latwalk/formulas.hpp"
#include "latwalk/kernel.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/recurrences.hpp"

#ifndef LATWALK_DEFAULT_FIXTURE_DIR
#define LATWALK_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace latwalk {
namespace fixtures {

namespace {

WalkConstraint class_constraint(const std::string& cls) {
    if (cls == "excursion") return WalkConstraint::Excursion;
    if (cls == "meander" || cls == "meander_any") return WalkConstraint::Meander;
    if (cls == "strictly_positive") return WalkConstraint::StrictlyPositive;
    if (cls == "bridge") return WalkConstraint::Bridge;
    if (cls == "walk") return WalkConstraint::Unconstrained;
    throw std::invalid_argument("unknown walk class: " + cls);
}

Rational oracle_value(const Fixture& f, long n) {
    StepSet steps = make_family(f.family, f.h);
    if (f.to_any) {
        if (f.walk_class == "strictly_positive") {
            // Positive meanders: strictly positive walks ending anywhere.
            Rational total(n == 0 ? 1 : 0);
            for (long k = 1; k <= steps.up_span() * n; ++k)
                total += oracle::count({steps, n, f.from, k, WalkConstraint::StrictlyPositive});
            return total;
        }
        return oracle::meander_total(steps, n);
    }
    return oracle::count({steps, n, f.from, f.to, class_constraint(f.walk_class)});
}

}  // namespace

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    Fixture f;
    f.name = std::filesystem::path(path).stem().string();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# source:", 0) == 0) {
                f.source = line.substr(9);
                f.source.erase(0, f.source.find_first_not_of(' '));
            } else if (line.rfind("# query:", 0) == 0) {
                std::istringstream qs(line.substr(8));
                std::string kv;
                while (qs >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos)
                        throw std::runtime_error("bad query token in " + path + ": " + kv);
                    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                    if (key == "family") f.family = val;
                    else if (key == "h") f.h = std::stol(val);
                    else if (key == "class") f.walk_class = val;
                    else if (key == "from") f.from = std::stol(val);
                    else if (key == "to") {
                        if (val == "any") f.to_any = true;
                        else f.to = std::stol(val);
                    } else throw std::runtime_error("bad query key in " + path + ": " + key);
                }
            }
            continue;
        }
        std::istringstream row(line);
        long n;
        std::string value;
        if (!(row >> n >> value)) throw std::runtime_error("bad data line in " + path + ": " + line);
        f.values.emplace_back(n, value);
    }
    if (f.source.empty()) throw std::runtime_error("fixture missing '# source:' header: " + path);
    if (f.family.empty() || f.walk_class.empty())
        throw std::runtime_error("fixture missing '# query:' header: " + path);
    return f;
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".txt") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<Fixture> out;
    for (const auto& p : paths) out.push_back(load_fixture(p));
    return out;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("LATWALK_FIXTURE_DIR")) return env;
    return LATWALK_DEFAULT_FIXTURE_DIR;
}

void VerifyReport::record(const std::string& query, const std::string& expected,
                          const std::string& got) {
    ++checks;
    if (expected == got) ++passes;
    else failures.push_back({query, expected, got});
}

void VerifyReport::merge(const VerifyReport& other) {
    checks += other.checks;
    passes += other.passes;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

VerifyReport verify_fixtures(const std::string& dir) {
    VerifyReport report;
    for (const Fixture& f : load_fixture_dir(dir)) {
        for (const auto& [n, expected] : f.values) {
            std::string got = to_string(oracle_value(f, n));
            report.record(f.name + " n=" + std::to_string(n), expected, got);
        }
    }
    return report;
}

VerifyReport verify_family(const std::string& family, long h, long max_n, long max_k) {
    VerifyReport report;
    StepSet steps = make_family(family, h);
    const std::string tag = family + "(h=" + std::to_string(h) + ")";
    KernelRoots roots = solve_distinguished_root(steps, static_cast<int>((max_n + 2) * steps.down_span()));

    auto check_series = [&](const char* what, const RationalSeries& s, WalkConstraint cls, long j,
                            long k) {
        for (long n = 0; n <= max_n; ++n)
            report.record(tag + " " + what + " n=" + std::to_string(n),
                          to_string(oracle::count({steps, n, j, k, cls})),
                          to_string(s.coeff(static_cast<int>(n))));
    };

    check_series("excursion_gf", excursion_gf(roots, static_cast<int>(max_n)),
                 WalkConstraint::Excursion, 0, 0);
    for (long k = 1; k <= max_k; ++k)
        check_series(("positive_walk_gf k=" + std::to_string(k)).c_str(),
                     positive_walk_gf(roots, k, static_cast<int>(max_n)),
                     WalkConstraint::StrictlyPositive, 0, k);
    {
        RationalSeries m = positive_meander_gf(roots, static_cast<int>(max_n));
        for (long n = 0; n <= max_n; ++n) {
            Rational expect = n == 0 ? Rational(1) : Rational(0);
            if (n > 0)
                for (long k = 1; k <= h * n; ++k)
                    expect += oracle::count({steps, n, 0, k, WalkConstraint::StrictlyPositive});
            report.record(tag + " positive_meander_gf n=" + std::to_string(n), to_string(expect),
                          to_string(m.coeff(static_cast<int>(n))));
        }
    }

    if (family == "sym_with_zero" || family == "sym_no_zero") {
        if (h <= 3) {
            for (long n = 0; n <= std::min<long>(max_n, 10); ++n) {
                for (long k = 1; k <= max_k; ++k)
                    report.record(
                        tag + " general_positive_count n=" + std::to_string(n) +
                            " k=" + std::to_string(k),
                        to_string(oracle::count({steps, n, 0, k, WalkConstraint::StrictlyPositive})),
                        formulas::general_positive_count(family, h, n, k).get_str());
                Rational strictly(n == 0 ? 1 : 0);
                for (long k = 1; k <= h * n; ++k)
                    strictly += oracle::count({steps, n, 0, k, WalkConstraint::StrictlyPositive});
                report.record(tag + " general_positive_meander_count n=" + std::to_string(n),
                              to_string(strictly),
                              formulas::general_positive_meander_count(family, h, n).get_str());
            }
        }
        // Unconstrained closed form vs oracle.
        for (long n = 0; n <= std::min<long>(max_n, 12); ++n)
            for (long k = -2; k <= 2; ++k)
                report.record(tag + " unconstrained_count n=" + std::to_string(n) +
                                  " k=" + std::to_string(k),
                              to_string(oracle::count({steps, n, 0, k, WalkConstraint::Unconstrained})),
                              formulas::unconstrained_count(family, h, n, k).get_str());
    }

    if (family == "basketball") {
        std::vector<Integer> rec = recurrences::eval_recurrence_prefix(
            recurrences::basketball_g01_recurrence(), max_n);
        for (long n = 1; n <= max_n; ++n) {
            std::string exact =
                to_string(oracle::count({steps, n, 0, 1, WalkConstraint::StrictlyPositive}));
            report.record(tag + " g01 formula n=" + std::to_string(n), exact,
                          formulas::basketball_g01(n).get_str());
            report.record(tag + " g01 recurrence n=" + std::to_string(n), exact,
                          rec[n].get_str());
            report.record(tag + " g02 formula n=" + std::to_string(n),
                          to_string(oracle::count({steps, n, 0, 2, WalkConstraint::StrictlyPositive})),
                          formulas::basketball_g02(n).get_str());
        }
        for (long n = 0; n <= max_n; ++n)
            report.record(tag + " excursion formula n=" + std::to_string(n),
                          to_string(oracle::count({steps, n, 0, 0, WalkConstraint::Excursion})),
                          formulas::basketball_excursion(n).get_str());
    }
    return report;
}

VerifyReport verify_default(const std::string& fixture_dir, long max_n) {
    VerifyReport report = verify_fixtures(fixture_dir);
    report.merge(verify_family("basketball", 2, max_n, 2));
    for (long h = 1; h <= 3; ++h) {
        report.merge(verify_family("sym_with_zero", h, max_n, 2));
        report.merge(verify_family("sym_no_zero", h, max_n, 2));
    }
    report.merge(verify_family("dyck", 1, max_n, 2));
    report.merge(verify_family("motzkin", 1, max_n, 2));
    return report;
}

}  // namespace fixtures
}  // namespace latwalk
