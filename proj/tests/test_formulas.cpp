#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latwalk/formulas.hpp"
#include "latwalk/oracle.hpp"

using namespace latwalk;
using namespace latwalk::formulas;

namespace {

Rational oc(const StepSet& s, long n, long j, long k, WalkConstraint c) {
    return oracle::count({s, n, j, k, c});
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(6, 2) == 15);
    CHECK(binom(6, -1) == 0);
    CHECK(binom(6, 7) == 0);
    CHECK(binom(0, 0) == 1);
    // Negative upper index: C(-1, k) = (-1)^k.
    for (long k = 0; k <= 6; ++k) CHECK(binom(-1, k) == (k % 2 ? -1 : 1));
    CHECK(binom(-3, 2) == 6);
    CHECK(binom_rat(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom_rat(Rational(5), 2) == Rational(10));
}

TEST_CASE("m-nomial coefficients") {
    for (long m = 2; m <= 7; ++m) {
        for (long n = 0; n <= 12; ++n) {
            Integer row_sum = 0;
            for (long k = -1; k <= (m - 1) * n + 1; ++k) {
                Integer direct = mnomial(n, k, m);
                CHECK(direct == mnomial_alternating(n, k, m));
                // Symmetry of the coefficient rows.
                CHECK(direct == mnomial(n, (m - 1) * n - k, m));
                if (m == 2) CHECK(direct == binom(n, k));
                if (k >= 0 && k <= (m - 1) * n) row_sum += direct;
            }
            Integer power = 1;
            for (long i = 0; i < n; ++i) power *= m;
            CHECK(row_sum == power);
        }
    }
    // Fractional upper index degenerates to the integer case.
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 2 * n; ++k)
            CHECK(mnomial_frac(Rational(n), k, 3) == Rational(mnomial(n, k, 3)));
}

TEST_CASE("mock m-nomial coefficients") {
    for (long m = 1; m <= 5; ++m) {
        for (long n = 0; n <= 10; ++n) {
            Integer row_sum = 0;
            for (long k = -1; k <= 2 * m * n + 1; ++k) {
                Integer direct = mock_mnomial(n, k, m);
                CHECK(direct == mock_mnomial_via_mnomial(n, k, m));
                CHECK(direct == mock_mnomial(n, 2 * m * n - k, m));
                if (k >= 0) row_sum += direct;
            }
            Integer power = 1;
            for (long i = 0; i < n; ++i) power *= 2 * m;
            CHECK(row_sum == power);
        }
    }
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 4 * n; ++k)
            CHECK(mock_mnomial_frac(Rational(n), k, 2) == Rational(mock_mnomial(n, k, 2)));
}

TEST_CASE("unconstrained walk counts via (mock) m-nomials") {
    for (long h = 1; h <= 3; ++h) {
        for (const char* fam : {"sym_with_zero", "sym_no_zero"}) {
            StepSet s = make_family(fam, h);
            for (long n = 0; n <= 12; ++n) {
                for (long k = 0; k <= h * n; ++k) {
                    Integer v = unconstrained_count(fam, h, n, k);
                    CHECK(Rational(v) == oc(s, n, 0, k, WalkConstraint::Unconstrained));
                    CHECK(v == unconstrained_count(fam, h, n, -k));
                }
                CHECK(unconstrained_count(fam, h, n, h * n + 1) == 0);
            }
        }
    }
}

TEST_CASE("basketball closed forms") {
    StepSet b = make_family("basketball");
    for (long n = 0; n <= 30; ++n) {
        // Each evaluator checks its two displayed sums against each other
        // internally; here they are checked against the independent DP.
        CHECK(Rational(basketball_g01(n)) == oc(b, n, 0, 1, WalkConstraint::StrictlyPositive));
        CHECK(Rational(basketball_g02(n)) == oc(b, n, 0, 2, WalkConstraint::StrictlyPositive));
        CHECK(Rational(basketball_excursion(n)) == oc(b, n, 0, 0, WalkConstraint::Excursion));
    }
    CHECK(basketball_g01(5) == 22);
    CHECK(basketball_g02(5) == 31);
    CHECK(basketball_excursion(6) == 93);
}

TEST_CASE("cycle lemma: n g01(n) counts unconstrained walks to 1") {
    StepSet b = make_family("basketball");
    for (long n = 1; n <= 25; ++n)
        CHECK(Rational(Integer(n) * basketball_g01(n)) ==
              oc(b, n, 0, 1, WalkConstraint::Unconstrained));
}

TEST_CASE("nested-sum counts for the symmetric families") {
    for (long h = 1; h <= 3; ++h) {
        for (const char* fam : {"sym_with_zero", "sym_no_zero"}) {
            StepSet s = make_family(fam, h);
            for (long n = 0; n <= 10; ++n) {
                for (long k = 1; k <= 3; ++k)
                    CHECK(Rational(general_positive_count(fam, h, n, k)) ==
                          oc(s, n, 0, k, WalkConstraint::StrictlyPositive));
                Rational strict_total = n == 0 ? Rational(1) : Rational(0);
                for (long k = 1; k <= h * n; ++k)
                    strict_total += oc(s, n, 0, k, WalkConstraint::StrictlyPositive);
                CHECK(Rational(general_positive_meander_count(fam, h, n)) == strict_total);
            }
        }
    }
}

TEST_CASE("classical excursion formulas match the oracle") {
    const long n_max = 15;
    auto check_family = [&](const std::string& fam, long d, std::vector<Rational> params) {
        StepSet s = make_family(fam, d, params);
        for (long n = 0; n <= n_max; ++n)
            CHECK(table2_excursions(fam, d, params, n) ==
                  oc(s, n, 0, 0, WalkConstraint::Excursion));
    };
    check_family("dyck", 1, {});
    check_family("motzkin", 1, {});
    check_family("weighted_motzkin", 1, {Rational(1, 2), Rational(3), Rational(2)});
    check_family("weighted_motzkin", 1, {Rational(2), Rational(1), Rational(5)});
    check_family("bicolored_motzkin", 1, {});
    check_family("luka_all", n_max, {});
    for (long d = 2; d <= 4; ++d) {
        check_family("dary", d, {});
        check_family("upto_dary", d, {});
        check_family("d_dplus1", d, {});
    }
}

TEST_CASE("lagrange-buermann variant") {
    const int order = 30;
    RationalSeries z = RationalSeries::variable(1, order);
    RationalSeries one = RationalSeries::constant(Rational(1), 1, order);
    RationalSeries phi = (one + z) * (one + z);
    RationalSeries psi = inverse(one + z);
    CHECK(lagrange_variant_coefficient(phi, psi, 5) == Rational(22));
    CHECK(lagrange_variant_coefficient(phi, psi, 7) == Rational(213));
    for (long n = 1; n <= 25; ++n)
        CHECK(lagrange_variant_coefficient(phi, psi, n) == Rational(basketball_g01(n)));
}
