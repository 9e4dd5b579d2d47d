#ifndef LATWALK_FIXTURES_HPP
#define LATWALK_FIXTURES_HPP

#include <string>
#include <vector>

#include "latwalk/step_set.hpp"

namespace latwalk {
namespace fixtures {

/// A bundled reference sequence. File format:
///   # source: <where the values come from>
///   # query: family=<name> h=<h> class=<walk class> from=<j> to=<k|any>
///   <n> <value>
///   ...
struct Fixture {
    std::string name;    // file stem, e.g. "pos1_no_zero_h2_A166135"
    std::string source;
    std::string family;
    long h = 1;
    std::string walk_class;  // excursion | meander | strictly_positive | meander_any
    long from = 0;
    long to = 0;
    bool to_any = false;
    std::vector<std::pair<long, std::string>> values;  // (n, exact decimal)
};

Fixture load_fixture(const std::string& path);
std::vector<Fixture> load_fixture_dir(const std::string& dir);

/// LATWALK_FIXTURE_DIR from the environment, else the compiled-in
/// location of data/fixtures.
std::string default_fixture_dir();

struct CheckResult {
    std::string query;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    long checks = 0;
    long passes = 0;
    std::vector<CheckResult> failures;

    bool ok() const { return failures.empty(); }
    void record(const std::string& query, const std::string& expected, const std::string& got);
    void merge(const VerifyReport& other);
};

/// Every fixture value vs the DP oracle.
VerifyReport verify_fixtures(const std::string& dir);

/// Cross-checks oracle vs series vs closed forms (vs recurrence for the
/// basketball family) for one family, n <= max_n, end altitudes <= max_k.
VerifyReport verify_family(const std::string& family, long h, long max_n, long max_k);

/// The default scope used by `verify` with no arguments: all fixtures
/// plus cross-checks for the symmetric families h <= 3 and basketball.
VerifyReport verify_default(const std::string& fixture_dir, long max_n);

}  // namespace fixtures
}  // namespace latwalk

#endif
