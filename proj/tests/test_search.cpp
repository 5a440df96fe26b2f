#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"

#include "bentcomp/search.hpp"

using namespace bentcomp;

namespace {

// All 2n ordered pairs reachable from (d1, d2) by doubling both exponents
// mod 2^n - 1 (n doublings, each in both orders).
std::set<std::pair<u32, u32>> doubling_orbit(u32 d1, u32 d2, int n) {
    const u64 q1 = (u64{1} << n) - 1;
    std::set<std::pair<u32, u32>> orbit;
    u64 a = d1, b = d2;
    for (int j = 0; j < n; ++j) {
        orbit.insert({u32(a), u32(b)});
        orbit.insert({u32(b), u32(a)});
        a = a * 2 % q1;
        b = b * 2 % q1;
    }
    return orbit;
}

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

} // namespace

TEST_CASE("canonical representative of a doubling orbit") {
    // (2,5) on 4 bits doubles through (4,10), (8,20 mod 15 = 5) = (5,8),
    // (10,16 mod 15 = 1) = (1,10); the least ordered pair is (1,10).
    CHECK(canonical_pair(2, 5, 4) == std::pair<u32, u32>{1, 10});
    CHECK(canonical_pair(5, 2, 4) == std::pair<u32, u32>{1, 10});
    CHECK(canonical_pair(1, 10, 4) == std::pair<u32, u32>{1, 10});
    CHECK(canonical_pair(2, 9, 6) == std::pair<u32, u32>{1, 36});
    CHECK(canonical_pair(3, 10, 6) == std::pair<u32, u32>{3, 10});

    // The representative is a member of its own orbit and is orbit-invariant.
    for (u32 d1 = 1; d1 <= 14; ++d1)
        for (u32 d2 = d1 + 1; d2 <= 14; ++d2) {
            auto c = canonical_pair(d1, d2, 4);
            auto orbit = doubling_orbit(d1, d2, 4);
            CHECK(orbit.count(c) == 1);
            for (auto [a, b] : orbit) CHECK(canonical_pair(a, b, 4) == c);
            CHECK(c == *std::min_element(orbit.begin(), orbit.end()));
        }

    CHECK_THROWS(canonical_pair(0, 5, 4));   // zero exponent
    CHECK_THROWS(canonical_pair(3, 3, 4));   // equal: the sum collapses to 0
    CHECK_THROWS(canonical_pair(3, 18, 4));  // 18 mod 15 == 3 again
}

TEST_CASE("exhaustive 4-bit scan finds exactly the three known orbits") {
    BinomialSearchConfig cfg;
    cfg.n = 4;
    auto r = search_binomials(cfg);

    CHECK(r.complete);
    CHECK(r.next_outer == 14);
    // 105 ordered pairs fall into orbits of size <= 2n = 8; 25 survive
    // canonicalization.
    CHECK(r.pairs_examined == 25);

    REQUIRE(r.hits.size() == 3);
    for (const auto& h : r.hits) {
        CHECK(h.n == 4);
        CHECK(h.bent_count == 12); // 2^4 - 2^2, re-verified by the full count
    }
    // x + x^5 (degree-one term added to the 5-power map: components stay bent)
    CHECK(r.hits[0] == BinomialHit{4, 1, 5, 12, "norm"});
    // canonical form of x^2 + x^5
    CHECK(r.hits[1] == BinomialHit{4, 1, 10, 12, "norm"});
    // x^3 + x^6 = x^2 * (x + x^4)
    CHECK(r.hits[2] == BinomialHit{4, 3, 6, 12, "trace_e1"});

    CHECK_THROWS(search_binomials({.n = 5}));  // odd: no bent components exist
    CHECK_THROWS(search_binomials({.n = 2}));
    CHECK_THROWS(search_binomials({.n = 18}));
}

TEST_CASE("6-bit scan: expected orbits, and squared-power exponents stay at the base form") {
    BinomialSearchConfig cfg;
    cfg.n = 6;
    cfg.jobs = 2;
    auto r = search_binomials(cfg);

    CHECK(r.complete);
    REQUIRE(r.hits.size() == 5);
    CHECK(r.hits[0] == BinomialHit{6, 1, 9, 56, "norm"});
    CHECK(r.hits[1] == BinomialHit{6, 1, 18, 56, "norm"});
    CHECK(r.hits[2] == BinomialHit{6, 1, 36, 56, "norm"}); // x^2 + x^9's orbit
    CHECK(r.hits[3] == BinomialHit{6, 3, 10, 56, "trace_e1"});
    CHECK(r.hits[4] == BinomialHit{6, 3, 17, 56, "trace_e1"}); // x^5 + x^12's orbit

    // Hits arrive sorted because rows are processed in order.
    for (size_t i = 1; i < r.hits.size(); ++i)
        CHECK(std::pair{r.hits[i - 1].d1, r.hits[i - 1].d2} <
              std::pair{r.hits[i].d1, r.hits[i].d2});

    // Whenever an orbit pairs x^(2^i+1) with x^(2^m+1), the found ones all
    // have i = 0: the power-sum maps x^(2^i+1) + x^(2^m+1) with 0 < i < m
    // never reach the maximal count.
    for (const auto& h : r.hits) {
        const u32 gold = (1u << 3) + 1; // 9
        for (auto [a, b] : doubling_orbit(h.d1, h.d2, 6)) {
            if (b != gold || a == b) continue;
            bool power_sum_form = false;
            for (int i = 1; i < 3; ++i) power_sum_form |= a == (1u << i) + 1;
            CHECK_FALSE(power_sum_form);
        }
    }
}

TEST_CASE("checkpointed scan resumes to the identical result") {
    const std::string path = temp_path("bentcomp_search_ckpt.json");
    std::filesystem::remove(path);

    BinomialSearchConfig full;
    full.n = 6;
    auto expect = search_binomials(full);

    BinomialSearchConfig part = full;
    part.checkpoint_path = path;
    part.budget_pairs = 20; // a handful of rows per run

    int runs = 0;
    BinomialSearchResult r;
    u64 total_pairs = 0;
    while (true) {
        r = search_binomials(part);
        total_pairs += r.pairs_examined;
        ++runs;
        REQUIRE(runs < 100);
        if (r.complete) break;
        CHECK(r.pairs_examined >= part.budget_pairs);
        CHECK(r.next_outer >= 1);
    }

    CHECK(runs > 2); // the budget actually split the scan
    CHECK(total_pairs == expect.pairs_examined);
    CHECK(r.hits == expect.hits);
    CHECK(r.next_outer == expect.next_outer);

    // Re-running on a finished checkpoint is a no-op with the same answer.
    auto again = search_binomials(part);
    CHECK(again.complete);
    CHECK(again.pairs_examined == 0);
    CHECK(again.hits == expect.hits);

    // The file is plain JSON with the scan position and the hits found so far.
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("\"n\": 6") != std::string::npos);
    CHECK(text.find("\"last_completed_outer_index\": 61") != std::string::npos);
    CHECK(text.find("\"profile_tag\": \"trace_e1\"") != std::string::npos);

    // A checkpoint written for one size refuses to seed another.
    BinomialSearchConfig other = part;
    other.n = 4;
    CHECK_THROWS(search_binomials(other));

    std::filesystem::remove(path);
}
