#include <algorithm>
#include <string>

#include "doctest.h"

#include "bentcomp/suites.hpp"

using namespace bentcomp;

namespace {

const SuiteCheck* find_check(const SuiteResult& r, const std::string& needle) {
    for (const auto& c : r.checks)
        if (c.name.find(needle) != std::string::npos) return &c;
    return nullptr;
}

bool note_contains(const SuiteResult& r, const std::string& needle) {
    return std::any_of(r.checks.begin(), r.checks.end(), [&](const SuiteCheck& c) {
        return c.note.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("every suite passes at m = 3 with the expected evidence") {
    SuiteParams p;
    p.m = 3;
    auto results = run_all_suites(p);
    REQUIRE(results.size() == suite_ids().size());
    for (size_t i = 0; i < results.size(); ++i) {
        CAPTURE(results[i].id);
        CHECK(results[i].id == suite_ids()[i]);
        CHECK(results[i].pass);
        CHECK(results[i].counterexample.empty());
        CHECK(!results[i].checks.empty());
    }

    auto by_id = [&](const std::string& id) -> const SuiteResult& {
        auto it = std::find_if(results.begin(), results.end(),
                               [&](const SuiteResult& r) { return r.id == id; });
        REQUIRE(it != results.end());
        return *it;
    };

    // Pinned evidence counts at m = 3.
    CHECK(note_contains(by_id("wt"), "126 (h, e) cases"));
    CHECK(note_contains(by_id("conj-niho"), "minimum L=4 at u=3"));
    CHECK(note_contains(by_id("niho-k2"),
                        "316 pairs, 168 with both coefficients outside"));
    CHECK(by_id("table1").checks.size() == 7); // 4 admissible rows + 3 skip notes
    CHECK(note_contains(by_id("table1"), "u=19"));
    CHECK(by_id("bino").checks.size() == 4);
    CHECK(find_check(by_id("cor2"), "only when gcd(e, m) = 1") != nullptr);
    CHECK(note_contains(by_id("mm-outside"), "112 of 112 bent components fail"));
}

TEST_CASE("degenerate small fields are skipped with reasons, never asserted") {
    SuiteParams p;
    p.m = 2;

    auto conda = run_suite("condA", p);
    CHECK(conda.pass);
    REQUIRE(conda.checks.size() == 1);
    CHECK(conda.checks[0].note.find("skipped at m=2") != std::string::npos);

    auto nvec = run_suite("nvec", p);
    CHECK(nvec.pass);
    REQUIRE(nvec.checks.size() == 1);
    CHECK(nvec.checks[0].note.find("m >= 3") != std::string::npos);

    auto cn = run_suite("conj-niho", p);
    CHECK(cn.pass);
    CHECK(note_contains(cn, "no admissible exponents at m=2"));

    // At m = 2 the plateau bound degenerates to 0, so the gcd converse fails;
    // it must surface as a note, not as an assertion.
    auto cor2 = run_suite("cor2", p);
    CHECK(cor2.pass);
    CHECK(find_check(cor2, "only when gcd(e, m) = 1") == nullptr);
    CHECK(note_contains(cor2, "degenerates to 0 at m=2"));
}

TEST_CASE("the root-count identity is asserted only under the permutation "
          "hypothesis") {
    SuiteParams p;
    p.m = 4;
    auto r = run_suite("three-valued", p);
    CHECK(r.pass);
    CHECK(note_contains(r, "4 permutation exponents are three-valued"));
    CHECK(note_contains(r, "6 non-permutation exponents"));
}

TEST_CASE("the even-m rank coincidence is reported, not papered over") {
    SuiteParams p;
    p.m = 6;
    auto r = run_suite("cor2", p);
    CHECK(r.pass);
    CHECK(find_check(r, "only when gcd(e, m) = 1") == nullptr);
    auto* note = find_check(r, "gcd converse does not hold");
    REQUIRE(note != nullptr);
    CHECK(note->note.find("e=2") != std::string::npos);
    CHECK(note->note.find("e=4") != std::string::npos);
}

TEST_CASE("explicitly requested inadmissible parameters throw") {
    SuiteParams p;
    p.m = 3;
    CHECK_THROWS_AS(run_suite("no-such-suite", p), std::invalid_argument);

    SuiteParams big;
    big.m = 9;
    CHECK_THROWS_AS(run_suite("wt", big), std::invalid_argument);

    SuiteParams t;
    t.m = 5;
    t.row = "row3";
    CHECK_THROWS_AS(run_suite("table1", t), std::invalid_argument);

    SuiteParams te;
    te.m = 5;
    te.row = "row5";
    te.e = 1;
    CHECK_THROWS_AS(run_suite("table1", te), std::invalid_argument);

    SuiteParams sweep;
    sweep.m_max = 7;
    CHECK_THROWS_AS(run_suite("bino", sweep), std::invalid_argument);
}

TEST_CASE("requesting one table row narrows the report to that row") {
    SuiteParams p;
    p.m = 5;
    p.row = "gold";
    p.e = 1;
    auto r = run_suite("table1", p);
    CHECK(r.pass);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].name.find("gold (e=1)") != std::string::npos);
    CHECK(r.checks[0].note == "u=3, L=8, nonlinearity=384");
}
