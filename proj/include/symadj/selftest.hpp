#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symadj {
namespace selftest {

// One run of a property suite. Failures carry a case description and the
// witness values; an empty failure list is a pass.
struct Report {
    std::string suite;
    uint64_t seed = 0;
    int trials = 0;
    std::vector<std::pair<std::string, std::string>> failures;
    double wall_seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

using SuiteFn = Report (*)(uint64_t seed, int trials);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

const std::vector<SuiteEntry>& all_suites();

// Runs one suite by name; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, uint64_t seed, int trials);

// Exact equalities of the arithmetic distance under translation, congruence
// by invertibles, and nonzero scaling, plus the metric axioms.
Report suite_metric_invariance(uint64_t seed, int trials);
// Rank additivity of a sum against independent column-span counting.
Report suite_direct_sum(uint64_t seed, int trials);
// Distance-along-a-line dichotomy against brute force, plus the two
// line-membership lemmas.
Report suite_line_dichotomy(uint64_t seed, int trials);
// Adjacency chains and invertible chains with verified crossings.
Report suite_chains(uint64_t seed, int trials);
// Congruence diagonalization, inertia invariance, rank-one decompositions,
// idempotent splittings, corner compression.
Report suite_quadform(uint64_t seed, int trials);
// The 3-space bridge: determinant identity, null separation vs adjacency,
// the swap conjugation, Weyl maps.
Report suite_minkowski_bridge(uint64_t seed, int trials);
// Congruence -> Lorentz -> congruence round trip.
Report suite_lorentz_roundtrip(uint64_t seed, int trials);
// Generated standard/degenerate maps: soundness, classification, line and
// distance behaviour, block support.
Report suite_map_dichotomy(uint64_t seed, int trials);
// Affine recovery on 2x2 symmetric inputs.
Report suite_affine_recovery(uint64_t seed, int trials);
// Maps that must be rejected, with concrete witnesses.
Report suite_negative_controls(uint64_t seed, int trials);

}  // namespace selftest
}  // namespace symadj
