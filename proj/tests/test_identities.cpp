#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <string>

#include "seidel/identities.hpp"
#include "seidel/json_io.hpp"

using seidel::IdentityReport;
using seidel::Integer;
using seidel::Rational;
using seidel::RunOptions;
using seidel::Verdict;

TEST_CASE("registry shape") {
    const auto& reg = seidel::registry();
    CHECK(reg.size() >= 20);

    std::set<std::string> ids;
    for (const auto& d : reg) {
        CHECK(ids.insert(d.id).second);  // unique ids
        CHECK(!d.variants.empty());
        CHECK(!d.statement.empty());
        // both evaluation routes are named and distinct
        CHECK(!d.lhs_route.empty());
        CHECK(!d.rhs_route.empty());
        CHECK(d.lhs_route != d.rhs_route);
        std::set<std::string> names;
        for (const auto& v : d.variants) {
            CHECK(names.insert(v.name).second);
            CHECK(d.expected.count(v.name) == 1);  // every variant has a pinned verdict
            if (v.suspect) CHECK(!v.reference.empty());
        }
    }
    CHECK(ids.count("hyperharmonic-explicit") == 1);
    CHECK(ids.count("lastfib") == 1);

    const auto& lastfib = seidel::find_identity("lastfib");
    CHECK(lastfib.variants.size() == 2);
    CHECK(lastfib.variants[0].name == "printed");
    CHECK(lastfib.variants[1].name == "corrected");

    CHECK_THROWS_AS(seidel::find_identity("no-such-id"), std::invalid_argument);
    CHECK_THROWS_AS(lastfib.variant("no-such-variant"), std::invalid_argument);
}

TEST_CASE("passing identity reports") {
    IdentityReport r = seidel::run_identity("fibnew1", "printed");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.tested == 30);
    CHECK(r.failure_count == 0);
    CHECK(r.failures.empty());
}

TEST_CASE("domain overrides") {
    RunOptions opts;
    opts.max_overrides["k"] = 10;
    IdentityReport r = seidel::run_identity("fibnew1", "printed", opts);
    CHECK(r.tested == 10);
    CHECK(r.domain[0].hi == 10);

    RunOptions bad;
    bad.max_overrides["k"] = 0;  // below the identity's lower bound
    CHECK_THROWS_AS(seidel::run_identity("fibnew1", "printed", bad), std::domain_error);

    RunOptions unknown;
    unknown.max_overrides["z"] = 5;
    CHECK_THROWS_AS(seidel::run_identity("fibnew1", "printed", unknown), std::invalid_argument);
}

TEST_CASE("confirmed erratum carries the smallest counterexample") {
    RunOptions opts;
    opts.max_overrides["k"] = 5;
    opts.max_overrides["n"] = 30;
    IdentityReport r = seidel::run_identity("lastfib", "printed", opts);
    CHECK(r.verdict == Verdict::ErratumConfirmed);
    CHECK(r.failure_count > 0);
    REQUIRE(!r.failures.empty());
    const auto& first = r.failures.front();
    REQUIRE(first.params.size() == 2);
    CHECK(first.params[0].first == "k");
    CHECK(first.params[0].second == 1);
    CHECK(first.params[1].first == "n");
    CHECK(first.params[1].second == 4);
    CHECK(first.lhs == "3");
    CHECK(first.rhs == "2");
    CHECK(r.failures.size() <= 10);

    IdentityReport corrected = seidel::run_identity("lastfib", "corrected", opts);
    CHECK(corrected.verdict == Verdict::Pass);
}

TEST_CASE("reported counterexamples re-verify from scratch") {
    // recompute both sides of the pinned lastfib counterexample (k=1, n=4)
    // without any shared caches: a fresh series expansion on one side,
    // fresh boundary sums on the other
    seidel::Series r1 = seidel::incomplete_fib_gf(1, 8);
    Rational lhs = r1.coeff(4);
    CHECK(lhs == Rational(3));

    Integer a21(0), b21(0);
    for (long long i = 0; i < 1; ++i) {
        a21 += seidel::binomial(2 + 1 - i - 2, 2 - 1) * seidel::fibonacci(2 * i + 1);
    }
    for (long long i = 0; i < 2; ++i) {
        b21 += seidel::binomial(2 + 1 - i - 2, 1 - 1) * seidel::fibonacci(i);
    }
    Integer printed_rhs = a21 + b21 - seidel::hyperfibonacci(0, 2);
    CHECK(printed_rhs == Integer(2));
    CHECK(!(lhs == Rational(printed_rhs)));

    // and the corrected right-hand side does agree
    Integer corrected_rhs = seidel::fibonacci(4) - seidel::hyperfibonacci(0, 2);
    CHECK(lhs == Rational(corrected_rhs));
}

TEST_CASE("erratum confirmation consults the reference variant") {
    IdentityReport printed = seidel::run_identity("propfib2-col", "printed");
    CHECK(printed.verdict == Verdict::ErratumConfirmed);
    REQUIRE(!printed.failures.empty());
    CHECK(printed.failures.front().params[0].second == 1);  // n = 1
    CHECK(printed.failures.front().params[1].second == 1);  // k = 1

    CHECK(seidel::run_identity("propfib2-col", "corrected").verdict == Verdict::Pass);
    CHECK(seidel::run_identity("propfib2-col", "oracle-only").verdict == Verdict::Pass);

    CHECK(seidel::run_identity("hyperlucas-initial", "printed").verdict ==
          Verdict::ErratumConfirmed);
    CHECK(seidel::run_identity("incluc-binom-transform", "printed-case-2k1").verdict ==
          Verdict::ErratumConfirmed);
    CHECK(seidel::run_identity("incluc-binom-transform", "printed-L-closed-form").verdict ==
          Verdict::Pass);
}

TEST_CASE("suite filtering") {
    auto dumont = seidel::run_suite("dumont");
    CHECK(dumont.size() == 1);
    CHECK(dumont[0].id == "dumont-roundtrip");

    auto propfib2 = seidel::run_suite("propfib2");
    CHECK(propfib2.size() == 7);  // three identities, seven variants
    for (std::size_t i = 1; i < propfib2.size(); ++i) {
        CHECK(propfib2[i - 1].id <= propfib2[i].id);
    }

    CHECK(seidel::run_suite("zzz").empty());
}

TEST_CASE("verdicts are insensitive to the comparison order") {
    RunOptions coarse;
    coarse.order = 10;
    auto fine = seidel::run_suite("");
    auto rough = seidel::run_suite("", coarse);
    REQUIRE(fine.size() == rough.size());
    for (std::size_t i = 0; i < fine.size(); ++i) {
        CHECK(fine[i].id == rough[i].id);
        CHECK(fine[i].variant == rough[i].variant);
        CHECK(fine[i].verdict == rough[i].verdict);
    }
}

TEST_CASE("reports are deterministic") {
    auto a = seidel::run_suite("lastfib");
    auto b = seidel::run_suite("lastfib");
    CHECK(seidel::to_json(a).dump() == seidel::to_json(b).dump());

    // a different rng seed changes random instances but not verdicts
    RunOptions other;
    other.rng_seed = 42;
    auto c = seidel::run_suite("dumont", other);
    CHECK(c[0].verdict == Verdict::Pass);
}

TEST_CASE("suite matches the pinned expectations and the golden file") {
    auto reports = seidel::run_suite("");
    CHECK(seidel::suite_matches_expectations(reports));

    std::ifstream f(SEIDEL_GOLDEN_FILE);
    REQUIRE(f.good());
    seidel::Json golden = seidel::Json::parse(f);
    seidel::Json actual = seidel::verdict_map(reports);
    CHECK(golden == actual);

    // the golden file and the in-code expectations are the same table
    std::size_t pinned = 0;
    for (const auto& d : seidel::registry()) {
        for (const auto& [variant, verdict] : d.expected) {
            std::string key = d.id + "/" + variant;
            REQUIRE(golden.contains(key));
            CHECK(golden[key].get<std::string>() == seidel::to_string(verdict));
            ++pinned;
        }
    }
    CHECK(pinned == golden.size());
}

TEST_CASE("verdict text round trip") {
    using seidel::verdict_from_string;
    CHECK(verdict_from_string("PASS") == Verdict::Pass);
    CHECK(verdict_from_string("FAIL") == Verdict::Fail);
    CHECK(verdict_from_string("ERRATUM-CONFIRMED") == Verdict::ErratumConfirmed);
    CHECK_THROWS_AS(verdict_from_string("MAYBE"), std::invalid_argument);
}
