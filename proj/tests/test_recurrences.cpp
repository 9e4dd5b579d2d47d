#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latwalk/formulas.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/recurrences.hpp"

using namespace latwalk;
using namespace latwalk::recurrences;

TEST_CASE("recurrence shape and initial terms") {
    HolonomicRecurrence rec = basketball_g01_recurrence();
    CHECK(rec.order() == 3);
    CHECK(rec.initial == std::vector<Integer>{0, 1, 1});
    std::vector<Integer> prefix = eval_recurrence_prefix(rec, 7);
    CHECK(prefix == std::vector<Integer>{0, 1, 1, 3, 7, 22, 65, 213});
}

TEST_CASE("recurrence matches the closed form") {
    HolonomicRecurrence rec = basketball_g01_recurrence();
    std::vector<Integer> prefix = eval_recurrence_prefix(rec, 200);
    for (long n = 0; n <= 200; ++n)
        CHECK(prefix[static_cast<size_t>(n)] == formulas::basketball_g01(n));
}

TEST_CASE("recurrence matches the oracle at sampled points") {
    HolonomicRecurrence rec = basketball_g01_recurrence();
    StepSet b = make_family("basketball");
    std::vector<Integer> prefix = eval_recurrence_prefix(rec, 400);
    for (long n : {50L, 123L, 300L, 400L})
        CHECK(Rational(prefix[static_cast<size_t>(n)]) ==
              oracle::count({b, n, 0, 1, WalkConstraint::StrictlyPositive}));
}

TEST_CASE("single-value evaluation agrees with the prefix") {
    HolonomicRecurrence rec = basketball_g01_recurrence();
    std::vector<Integer> prefix = eval_recurrence_prefix(rec, 50);
    for (long n : {0L, 1L, 2L, 3L, 17L, 50L})
        CHECK(eval_recurrence(rec, n) == prefix[static_cast<size_t>(n)]);
}

TEST_CASE("terms grow like 4^n") {
    // g(n+1)/g(n) -> 4; digit counts give a cheap sanity bound.
    HolonomicRecurrence rec = basketball_g01_recurrence();
    Integer g1000 = eval_recurrence(rec, 1000);
    size_t digits = g1000.get_str().size();
    // log10(4^1000 * 1000^{-3/2} / sqrt(5 pi)) ~ 596.96.
    CHECK(digits == 597);
}

TEST_CASE("benchmark agrees with the dp oracle") {
    BenchmarkResult r = benchmark(300);
    CHECK(r.value == eval_recurrence(basketball_g01_recurrence(), 300));
    CHECK(r.recurrence_seconds >= 0.0);
    CHECK(r.dp_seconds >= 0.0);
}
