#ifndef WASP_CHOICES_HPP
#define WASP_CHOICES_HPP

#include "wasp/rational.hpp"
#include "wasp/semantics.hpp"
#include "wasp/syntax.hpp"

#include <cstddef>
#include <vector>

namespace wasp {

// Everything about total choices: the canonical enumeration, the product
// weights w_T, and the entailed stable models <t>.
struct ChoiceTable {
    std::vector<EventMask> choices;                   // canonical order
    std::vector<Rational> weights;                    // w_T(t)
    std::vector<std::vector<std::size_t>> models_of;  // <t>, sorted model-ids

    std::size_t size() const { return choices.size(); }
};

// All 2^k polarity selections over the weighted atoms, in canonical order:
// weighted facts in source order, each annotated atom before its
// complement, later facts varying fastest. A weight-free program has the
// single empty choice.
std::vector<EventMask> total_choices(const Program& program);

// w_T(t): product over the weighted facts of w when the annotated atom is
// in t, 1-w when its complement is.
Rational weight_tc(const Program& program, EventMask t);

// <t> = { s in M : t is a subset of s }.
std::vector<std::size_t> models_of_tc(EventMask t, const StableModelSet& models);

ChoiceTable choice_table(const Program& program, const StableModelSet& models);

} // namespace wasp

#endif
