#include "doctest.h"

#include "bentcomp/report.hpp"

using namespace bentcomp;

TEST_CASE("analysis report serializes with a fixed field order") {
    auto tw = make_tower(2);
    auto F = binomial_pair(0, tw);
    auto rep = analyze(F);
    auto text = to_json(rep);

    // Field order is part of the contract: reruns must be byte-identical.
    const char* expect = R"json({
  "n": 4,
  "m": 2,
  "domain_is_product": false,
  "func_desc": "x^(2^2+1) + x^(2^0+1)",
  "bent_count": 12,
  "is_maximal": true,
  "s_f": {
    "size": 3,
    "is_subspace": true,
    "equals_subfield": true
  },
  "nonlinearity": 0,
  "nonlinearity_argmin": 1,
  "walsh_max": 16,
  "plateau_counts": {
    "0": 12,
    "4": 3
  },
  "non_plateaued": 0
}
)json";
    CHECK(text == expect);
    CHECK(to_json(rep) == text); // deterministic
}

TEST_CASE("spectrum and histogram CSV layouts") {
    auto f = make_field(2);
    Domain d = Domain::over_field(f);
    TruthTable t(2); // f(x) = Tr(x) on GF(4): one spike at w = 1
    for (u32 x = 0; x < 4; ++x) t.set(x, f->trace_bit(x));
    auto s = walsh_spectrum(t, d);
    CHECK(spectrum_csv(s) == "w_hex,walsh\n0x0,0\n0x1,4\n0x2,0\n0x3,0\n");

    auto tw = make_tower(2);
    auto F = binomial_pair(0, tw);
    auto ds = differential_spectrum(F);
    std::string csv = histogram_csv(ds);
    CHECK(csv.substr(0, 12) == "delta,count\n");
    // Row sums: 15 derivative directions x 16 points = 240 pairs over values.
    u64 total = 0, weighted = 0;
    for (size_t pos = 12; pos < csv.size();) {
        size_t comma = csv.find(',', pos), nl = csv.find('\n', comma);
        u64 value = std::stoull(csv.substr(pos, comma - pos));
        u64 count = std::stoull(csv.substr(comma + 1, nl - comma - 1));
        total += count;
        weighted += value * count;
        pos = nl + 1;
    }
    CHECK(total == 15 * 16);
    CHECK(weighted == 15 * 16); // each row of the table sums to 2^n
}

TEST_CASE("search hits render as a flat CSV") {
    std::vector<BinomialHit> hits{{4, 1, 5, 12, "norm"}, {4, 3, 6, 12, "trace_e1"}};
    CHECK(hits_csv(hits) ==
          "n,d1,d2,bent_count,profile_tag\n"
          "4,1,5,12,norm\n"
          "4,3,6,12,trace_e1\n");
    CHECK(hits_csv({}) == "n,d1,d2,bent_count,profile_tag\n");
}

TEST_CASE("construction descriptions round-trip through JSON and rebuild") {
    std::vector<ConstructionSpec> specs;

    ConstructionSpec tp;
    tp.kind = "trace_perm";
    tp.m = 3;
    tp.e = 1;
    tp.h = {0, 1, 2, 3, 4, 5, 6, 7};
    specs.push_back(tp);

    ConstructionSpec ng;
    ng.kind = "niho_general";
    ng.m = 3;
    ng.u1 = 3;
    ng.us = {5, 7};
    ng.r_k = 3;
    ng.r_bits = {0, 0, 0, 1}; // X2*X3
    specs.push_back(ng);

    ConstructionSpec nk;
    nk.kind = "niho_k2";
    nk.m = 3;
    nk.u1 = 2;
    nk.u2 = 2;
    specs.push_back(nk);

    ConstructionSpec mm;
    mm.kind = "mm";
    mm.m = 3;
    mm.j = 1;
    mm.u11 = 1;
    mm.us_pairs = {{4, 2}, {6, 4}};
    mm.r_k = 3;
    mm.r_bits = {0, 1, 1, 0}; // X2 + X3
    specs.push_back(mm);

    ConstructionSpec bi;
    bi.kind = "binomial";
    bi.m = 4;
    bi.i = 0;
    specs.push_back(bi);

    for (const auto& s : specs) {
        CAPTURE(s.kind);
        auto text = to_json(s);
        auto back = construction_from_json(text);
        CHECK(back == s);
        auto F = build(s);
        auto G = build(back);
        CHECK(F.table() == G.table());
        CHECK(F.desc() == G.desc());
        CHECK_FALSE(F.desc().empty());
        // Every one of these is a maximal-count witness; the rebuilt function
        // still is.
        CHECK(probe_maximal(F).maximal);
    }

    // Explicit moduli survive the round trip and steer the rebuild.
    ConstructionSpec alt = bi;
    alt.modulus_big = 0x11b; // x^8+x^4+x^3+x+1 instead of the default
    auto alt_back = construction_from_json(to_json(alt));
    CHECK(alt_back.modulus_big == 0x11b);
    CHECK(build(alt_back).table() != build(bi).table());
    CHECK(probe_maximal(build(alt_back)).maximal);
}

TEST_CASE("construction parsing rejects malformed input") {
    CHECK_THROWS(construction_from_json("not json"));
    CHECK_THROWS(construction_from_json("{\"kind\": \"unknown\", \"m\": 3}"));
    CHECK_THROWS(construction_from_json("{\"m\": 3}"));                  // no kind
    CHECK_THROWS(construction_from_json("{\"kind\": \"binomial\"}"));    // no m
    CHECK_THROWS(construction_from_json(
        "{\"kind\": \"niho_k2\", \"m\": 3, \"u1\": 2}")); // missing u2
    // Structurally valid JSON, invalid family parameters: the rebuild throws.
    ConstructionSpec bad;
    bad.kind = "binomial";
    bad.m = 3;
    bad.i = 3; // needs 0 <= i < m
    CHECK_THROWS(build(construction_from_json(to_json(bad))));
    ConstructionSpec badr;
    badr.kind = "niho_general";
    badr.m = 3;
    badr.u1 = 3;
    badr.us = {5, 7};
    badr.r_k = 3;
    badr.r_bits = {0, 0, 1}; // wrong length: needs 2^(k-1) = 4 bits
    CHECK_THROWS(build(badr));
}
