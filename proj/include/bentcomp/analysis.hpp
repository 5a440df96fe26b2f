#pragma once
#include <map>
#include "bentcomp/vecfn.hpp"

namespace bentcomp {

// One pass over all nonzero components. The parallel kernel distributes the
// component loop across OpenMP threads; every per-component result lands in a
// preallocated slot, and the final aggregation is sequential, so the output
// is identical for any worker count.
struct ComponentScan {
    u64 bent_count = 0;
    std::vector<u32> nonbent;           // a != 0 with non-bent component, ascending
    u32 nonlinearity = 0;               // min over components
    u32 nonlinearity_argmin = 0;        // smallest a attaining it
    u32 walsh_max = 0;                  // max |W| over all components
    std::map<int, u64> plateau_counts;  // k -> number of k-plateaued components
    u64 non_plateaued = 0;
};

ComponentScan scan_components(const VectorialFunction& F, int jobs = 0);

// Differential value histogram over all pairs (a != 0, b).
struct DiffSpectrum {
    std::map<u64, u64> histogram; // delta value -> number of (a,b) pairs
};

DiffSpectrum differential_spectrum(const VectorialFunction& F, int jobs = 0);

// Straightforward single-threaded reference implementations, kept as the
// ground truth the parallel kernels are tested (and benchmarked) against.
namespace serial {
ComponentScan scan_components(const VectorialFunction& F);
DiffSpectrum differential_spectrum(const VectorialFunction& F);
}

struct SfInfo {
    u64 size = 0;           // nonzero non-bent components
    bool is_subspace = false;      // S_F together with 0 is F_2-linear
    bool equals_subfield = false;  // ... and equals the canonical subfield copy
};

struct AnalysisReport {
    int n = 0;
    int m = -1; // half dimension when the domain has one
    bool domain_is_product = false;
    std::string func_desc;
    u64 bent_count = 0;
    bool is_maximal = false; // bent_count == 2^n - 2^(n/2)
    SfInfo s_f;
    u32 nonlinearity = 0;
    u32 nonlinearity_argmin = 0;
    u32 walsh_max = 0;
    std::map<int, u64> plateau_counts;
    u64 non_plateaued = 0;
};

AnalysisReport analyze(const VectorialFunction& F, int jobs = 0);

// Number of bent components with early exit: stops once more than
// 2^(n/2) - 1 non-bent components have been seen (the function can no longer
// be maximal), returning the count found so far and ok=false.
struct BentCountProbe {
    u64 bent_count = 0;
    bool maximal = false;
};
BentCountProbe probe_maximal(const VectorialFunction& F);

} // namespace bentcomp
