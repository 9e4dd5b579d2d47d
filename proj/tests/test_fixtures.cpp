#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "latwalk/fixtures.hpp"

using namespace latwalk;
using namespace latwalk::fixtures;

TEST_CASE("fixture file parsing") {
    std::string path = "latwalk_fixture_test.txt";
    {
        std::ofstream out(path);
        out << "# source: unit test\n";
        out << "# query: family=dyck h=1 class=excursion from=0 to=0\n";
        out << "0 1\n2 1\n4 2\n6 5\n";
    }
    Fixture f = load_fixture(path);
    std::remove(path.c_str());
    CHECK(f.source == "unit test");
    CHECK(f.family == "dyck");
    CHECK(f.h == 1);
    CHECK(f.walk_class == "excursion");
    CHECK(f.from == 0);
    CHECK(f.to == 0);
    CHECK(!f.to_any);
    REQUIRE(f.values.size() == 4);
    CHECK(f.values[3] == std::pair<long, std::string>{6, "5"});
}

TEST_CASE("bundled fixtures load and carry provenance") {
    std::vector<Fixture> all = load_fixture_dir(default_fixture_dir());
    CHECK(all.size() >= 34);
    for (const Fixture& f : all) {
        CHECK(!f.source.empty());
        CHECK(!f.values.empty());
        CHECK(!f.family.empty());
    }
}

TEST_CASE("every bundled fixture matches the oracle") {
    VerifyReport r = verify_fixtures(default_fixture_dir());
    CHECK(r.checks > 200);
    CHECK(r.passes == r.checks);
    for (const CheckResult& f : r.failures)
        MESSAGE(f.query, ": expected ", f.expected, ", got ", f.got);
    CHECK(r.ok());
}

TEST_CASE("family cross-check harness") {
    CHECK(verify_family("dyck", 1, 12, 3).ok());
    CHECK(verify_family("basketball", 2, 12, 3).ok());
    VerifyReport sym = verify_family("sym_with_zero", 3, 8, 2);
    CHECK(sym.ok());
    CHECK(sym.checks > 0);
}
