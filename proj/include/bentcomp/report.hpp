#pragma once
#include <string>
#include <utility>
#include <vector>

#include "bentcomp/constructions.hpp"
#include "bentcomp/search.hpp"

namespace bentcomp {

// JSON text of an analysis report, field order fixed so reruns are
// byte-identical: n, m, domain_is_product, func_desc, bent_count, is_maximal,
// s_f{size, is_subspace, equals_subfield}, nonlinearity, nonlinearity_argmin,
// walsh_max, plateau_counts, non_plateaued.
std::string to_json(const AnalysisReport& r, int indent = 2);

// CSV with header "w_hex,walsh", one row per w ascending.
std::string spectrum_csv(const WalshSpectrum& s);

// CSV with header "delta,count", rows ascending by delta value.
std::string histogram_csv(const DiffSpectrum& d);

// CSV with header "n,d1,d2,bent_count,profile_tag", rows in hit order.
std::string hits_csv(const std::vector<BinomialHit>& hits);

// ---------------------------------------------------------------------------
// A replayable description of a constructed function: the family name plus
// its parameters, with optional field-modulus overrides (0 = registry
// default).  Round-trips through JSON so a verified witness can be stored
// and rebuilt bit-for-bit later.
// ---------------------------------------------------------------------------
struct ConstructionSpec {
    std::string kind; // trace_perm | niho_general | niho_k2 | mm | binomial
    int m = 0;        // half dimension (the function lives on 2m bits)
    u32 modulus_small = 0; // degree-m field override
    u32 modulus_big = 0;   // degree-2m field override (field-domain kinds)

    // trace_perm
    int e = 0;
    std::vector<u32> h;

    // niho_general / niho_k2 / mm perturbation coefficients
    u32 u1 = 0, u2 = 0;
    std::vector<u32> us;

    // mm
    int j = 1;
    u32 u11 = 0;
    std::vector<std::pair<u32, u32>> us_pairs;

    // switch polynomial (niho_general, mm): arity k-1 value bits
    int r_k = 0;
    std::vector<int> r_bits;

    // binomial
    int i = 0;

    bool operator==(const ConstructionSpec&) const = default;
};

std::string to_json(const ConstructionSpec& s, int indent = 2);
ConstructionSpec construction_from_json(const std::string& text); // throws on bad input

// Rebuilds the described function (validating every family precondition).
VectorialFunction build(const ConstructionSpec& s);

} // namespace bentcomp
