#ifndef WASP_DATA_HPP
#define WASP_DATA_HPP

#include "wasp/algebra.hpp"
#include "wasp/propagation.hpp"
#include "wasp/syntax.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace wasp {

// Observed events, aggregated. `symbols` starts as the program universe
// and grows only in extend mode, so masks of in-universe observations are
// interchangeable with the program's.
struct Dataset {
    std::map<EventMask, std::uint64_t> counts;
    std::uint64_t total = 0;
    SymbolTable symbols;
    std::string source;
};

using ThetaAssignment = std::map<ThetaVar, Rational>;

// One event per line ("a -b", "{}" for the empty event); '#' starts a
// comment, blank lines are skipped. In strict mode unknown atoms are
// errors; in extend mode they enlarge the dataset's universe (such
// observations score as zero-probability misfits).
Dataset load_dataset(std::istream& in, const SymbolTable& universe, EventParseMode mode,
                     const std::string& source = "<stream>");

struct ScoreResult {
    double log_score = 0.0;          // sum of ln Pr over scorable observations
    std::uint64_t zero_prob_count = 0; // observations the program rules out
};

// Log-likelihood of the dataset at a numeric theta assignment.
// Observations with probability zero (including out-of-universe ones) are
// excluded from the sum and counted as misfits instead of yielding -inf.
// Throws SemanticError when the assignment violates the constraints or the
// normalizer vanishes at it.
ScoreResult log_score(const Pipeline& pipeline, const WeightReport& report,
                      const Dataset& dataset, const ThetaAssignment& assignment);

// Exhaustive grid search over the product of the per-group simplex grids
// with step 1/resolution. Candidates are ranked by fewer zero-probability
// observations, then higher log_score, then lexicographically smaller
// assignment; the returned assignment carries every group variable.
// A program without theta variables yields an empty assignment.
ThetaAssignment fit_theta(const Pipeline& pipeline, const WeightReport& report,
                          const Dataset& dataset, unsigned resolution);

// n independent draws from Pr_E(.; theta) over all consistent events.
// Deterministic for a fixed seed.
Dataset sample_events(const Pipeline& pipeline, const WeightReport& report,
                      const ThetaAssignment& assignment, std::uint64_t n,
                      std::uint64_t seed);

// ThetaAssignment as JSON text and back: an object mapping display names to
// rational strings, {"theta{ab|a}": "9/10"}. Parsing accepts a missing
// final variable per group (completed to 1 - sum) and validates the result.
std::string theta_to_json(const Pipeline& pipeline, const ThetaAssignment& assignment);
ThetaAssignment parse_theta_json(const Pipeline& pipeline, const std::string& text);

} // namespace wasp

#endif
