#pragma once
#include <string>
#include <vector>

#include "bentcomp/bits.hpp"

namespace bentcomp {

// Replayable verification suites: each id bundles the exhaustive checks for
// one family or claim at a caller-chosen desk scale.  Checks either assert
// (failing the suite with a counterexample) or record an observation in the
// note (skipped inadmissible parameters, known degenerate cases) without
// fabricating a pass for something that was not checked.
struct SuiteParams {
    int m = 3;       // half dimension: functions live on n = 2m bits
    int m_max = 0;   // sweep upper bound for sweeping suites (0: just m)
    int e = -1;      // restrict exponent-parameterized suites (-1: all)
    std::string row; // table1: restrict to one row id ("": all rows)
    int trials = 20; // size of randomized corpora
    u64 seed = 1;
    int jobs = 0;
};

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string note; // values observed, skip reasons, known exceptions
};

struct SuiteResult {
    std::string id;
    bool pass = true; // conjunction of the checks
    std::vector<SuiteCheck> checks;
    std::string counterexample; // JSON for the first failed check ("" if none)
};

// The known suite ids, in canonical order.
const std::vector<std::string>& suite_ids();

// Runs one suite; run_all_suites runs every suite in canonical order with
// the same parameters.  Both throw std::invalid_argument for an unknown id
// or explicitly requested inadmissible parameters.
SuiteResult run_suite(const std::string& id, const SuiteParams& p);
std::vector<SuiteResult> run_all_suites(const SuiteParams& p);

} // namespace bentcomp
