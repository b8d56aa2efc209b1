#ifndef WASP_PROPAGATION_HPP
#define WASP_PROPAGATION_HPP

#include "wasp/algebra.hpp"
#include "wasp/choices.hpp"
#include "wasp/eventspace.hpp"
#include "wasp/semantics.hpp"
#include "wasp/syntax.hpp"
#include "wasp/transform.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wasp {

// Everything the weight pipeline needs, computed once per program:
// derivation, stable models, total choices, the class census, and the
// simplex constraint groups (one per total choice entailing >= 2 models).
struct Pipeline {
    Program program;
    DerivedProgram derived;
    StableModelSet models;
    ChoiceTable choices;
    ClassTable classes;
    ConstraintSet constraints;
};

Pipeline analyze(Program program, std::size_t cap = 0);

// Renders theta{<model>|<choice>} with compressed event labels, e.g.
// "theta{ab|a}". The pipeline must outlive the namer.
ThetaNamer theta_namer(const Pipeline& pipeline);

// Display name -> variable, for reading theta assignments.
std::map<std::string, ThetaVar> theta_vars_by_name(const Pipeline& pipeline);

// The weight pipeline w_T -> w_M -> w_R -> w_E -> Z -> Pr_E, every
// polynomial stored in the eliminated canonical basis. Classes are indexed
// as in pipeline.classes.entries, choices as in pipeline.choices.
struct WeightReport {
    std::vector<std::vector<Poly>> per_class_given_tc; // w_R([e], t)
    std::vector<Poly> per_class;                       // w_R([e])
    std::vector<std::vector<Poly>> per_event_given_tc; // w_R([e], t) / #[e]
    std::vector<Poly> per_event;                       // w_E(e), per class
    Poly z;                                            // sum of all w_E
    std::vector<RationalFn> prob;                      // Pr_E per event; empty if z == 0

    bool z_is_zero() const { return z.is_zero(); }
};

WeightReport propagate(const Pipeline& pipeline);

// Share of choice t's weight given to model s: theta_{s,t} when t entails
// s among others, 1 when s is t's only model, 0 when t does not entail s.
// Raw basis (no elimination applied).
Poly weight_sm(const Pipeline& pipeline, std::size_t model, std::size_t choice);

// w_R([e], t): sum of the core's model shares; 0 for the inconsistent
// class and for the empty core. Raw basis.
Poly weight_class_given_tc(const Pipeline& pipeline, const ClassKey& key,
                           std::size_t choice);

// w_R([e]) = sum_t w_T(t) * w_R([e], t), eliminated basis.
Poly weight_class(const Pipeline& pipeline, const ClassKey& key);

// w_E(e) = w_R([e]) / #[e] (0 when the class is empty of events),
// eliminated basis.
Poly weight_event(const Pipeline& pipeline, const WeightReport& report, EventMask event);

// Z as a polynomial; throws SemanticError when identically zero (a program
// with no stable models has no distribution).
Poly normalizer(const WeightReport& report);

RationalFn prob_event(const Pipeline& pipeline, const WeightReport& report,
                      EventMask event);

// Sum of prob_event over a set of events (duplicates collapse).
RationalFn prob_event_set(const Pipeline& pipeline, const WeightReport& report,
                          std::vector<EventMask> events);

// Pr_T(t): the total-choice weight normalized over all total choices.
Rational prob_tc(const Pipeline& pipeline, std::size_t choice);

} // namespace wasp

#endif
