#ifndef WASP_REPORT_IO_HPP
#define WASP_REPORT_IO_HPP

#include "wasp/data.hpp"
#include "wasp/propagation.hpp"

#include <string>

namespace wasp {

enum class OutputFormat { pretty, tsv, json };

struct RenderOptions {
    OutputFormat format = OutputFormat::pretty;
    bool approx = false;   // decimals instead of exact rationals
    int digits = 6;        // decimal places under approx
    bool hide_aux = false; // drop generated "__" atoms from displayed events
};

std::string render_rational(const Rational& value, const RenderOptions& options);

// Polynomial / normalized-fraction rendering; constants go through
// render_rational so --approx applies to them.
std::string render_poly(const Poly& poly, const ThetaNamer& namer,
                        const RenderOptions& options);
std::string render_prob(const RationalFn& fn, const ThetaNamer& namer,
                        const RenderOptions& options);

// Event rendering honoring hide_aux ("a b", "{}").
std::string display_event(EventMask event, const SymbolTable& symbols,
                          const RenderOptions& options);

// "{ab,ac}" for cores, "bot" for the inconsistent class.
std::string class_label(const ClassKey& key, const Pipeline& pipeline,
                        const RenderOptions& options);

// Stable-model listing, one event per line (json: an array of strings).
std::string render_models(const Pipeline& pipeline, const RenderOptions& options);

// Total choices: choice, weight, entailed models.
std::string render_choice_table(const Pipeline& pipeline, const RenderOptions& options);

// Class census: core, size, sample.
std::string render_class_table(const Pipeline& pipeline, const RenderOptions& options);

// Full weight table: core, size, w_R, w_E, Pr_E, plus a check row (sizes
// sum to 4^n, sum of size*Pr_E is 1). Requires a nonzero normalizer.
std::string render_weight_table(const Pipeline& pipeline, const WeightReport& report,
                                const RenderOptions& options);

// Score/sample/fit outputs.
std::string render_score(const ScoreResult& result, const RenderOptions& options);
std::string render_dataset(const Dataset& dataset, const RenderOptions& options);

// The stable-core lattice in DOT: one node per core (all 2^m of them, plus
// the disconnected inconsistent node), edges the covering relation of the
// subset order, labels carrying class size and w_R.
std::string emit_lattice_dot(const Pipeline& pipeline, const WeightReport& report,
                             const RenderOptions& options = {});

} // namespace wasp

#endif
