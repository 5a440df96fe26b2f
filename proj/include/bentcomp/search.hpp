#pragma once
#include <string>
#include <utility>
#include <vector>

#include "bentcomp/analysis.hpp"

namespace bentcomp {

// Scan of two-exponent power maps x^d1 + x^d2 on F_{2^n} for the maximal
// bent-component count 2^n - 2^(n/2).
//
// Squaring the output is an F_2-linear substitution, so (d1, d2) and
// (2*d1, 2*d2) taken mod 2^n - 1 share one component multiset; only the
// lexicographically least ordered pair of each doubling orbit is evaluated.
struct BinomialSearchConfig {
    int n = 4;
    std::string checkpoint_path; // empty: no persistence
    u64 budget_pairs = 0;        // pause after this many evaluated pairs
                                 // (0: no cap); checked at row boundaries so
                                 // the checkpoint stays row-aligned
    int jobs = 0;
};

struct BinomialHit {
    int n = 0;
    u32 d1 = 0, d2 = 0;
    u64 bent_count = 0;
    std::string profile_tag; // "norm", "trace_e<e>", or "other"
    bool operator==(const BinomialHit&) const = default;
};

struct BinomialSearchResult {
    std::vector<BinomialHit> hits; // ascending by (d1, d2)
    bool complete = false;
    u64 pairs_examined = 0; // canonical pairs evaluated in this run
    u32 next_outer = 0;     // first d1 row not yet fully processed
};

// Lexicographically least ordered pair in the doubling orbit of (d1, d2),
// exponents taken in [1, 2^n - 2] mod 2^n - 1.
std::pair<u32, u32> canonical_pair(u32 d1, u32 d2, int n);

// Runs the scan, resuming from the checkpoint file when it exists; every hit
// is re-verified by a full component count before being recorded, and the
// profile tag comes from matching the differential spectrum against
// x^(2^m+1) ("norm") and the x^(2^e)*(x + x^(2^m)) family ("trace_e<e>").
// Throws on odd n, n outside [4, 16], or a checkpoint for a different n.
BinomialSearchResult search_binomials(const BinomialSearchConfig& cfg);

} // namespace bentcomp
