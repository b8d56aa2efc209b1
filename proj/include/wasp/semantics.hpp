#ifndef WASP_SEMANTICS_HPP
#define WASP_SEMANTICS_HPP

#include "wasp/syntax.hpp"
#include "wasp/transform.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace wasp {

// Guard rail for the exhaustive enumerations (2^{2n} candidate sets, 3^n
// consistent events). `override_cap` wins when nonzero, then the
// WASP_MAX_SYMBOLS environment variable, then the default of 12.
std::size_t effective_symbol_cap(std::size_t override_cap = 0);

// Gelfond/Lifschitz reduct of dp relative to x: rules whose default-negated
// atoms intersect x are dropped, surviving rules lose their naf literals.
// The result is naf-free.
DerivedProgram reduct(const DerivedProgram& dp, EventMask x);

// Classical satisfaction: every rule with body contained in x has a head
// atom in x. Requires a naf-free program.
bool is_model(const DerivedProgram& naf_free, EventMask x);

// All subset-minimal models, by exhaustive enumeration in increasing
// cardinality with superset pruning. Throws CapError past the symbol cap.
std::vector<EventMask> minimal_models(const DerivedProgram& naf_free,
                                      std::size_t cap = 0);

struct StableModelSet {
    std::vector<EventMask> models; // canonical order: size, then token order
    std::map<EventMask, std::size_t> index;

    std::size_t size() const { return models.size(); }
    std::optional<std::size_t> index_of(EventMask event) const {
        auto it = index.find(event);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// Stable models of the weighted program: every x ⊆ universe with
// x ∈ minimal_models(reduct(derive(p), x)). Throws CapError past the cap
// and SemanticError if an inconsistent stable model arises (a and -a both
// derived), which the weighted-fact disjunctions themselves never cause.
StableModelSet stable_models(const Program& program, std::size_t cap = 0);

// Same computation for an already-derived program.
StableModelSet stable_models(const DerivedProgram& dp, const SymbolTable& symbols,
                             std::size_t cap = 0);

} // namespace wasp

#endif
