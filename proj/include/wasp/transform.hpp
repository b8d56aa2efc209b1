#ifndef WASP_TRANSFORM_HPP
#define WASP_TRANSFORM_HPP

#include "wasp/syntax.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wasp {

// Weight-free program obtained by replacing each weighted fact a:w with the
// disjunctive fact a ; -a. Shares the source program's symbol layout.
struct DerivedProgram {
    SymbolTable symbols;
    std::vector<Rule> rules;
    std::vector<SignedAtom> choice_atoms; // annotated atoms, source order

    EventMask universe() const { return universe_mask(symbols.size()); }
};

DerivedProgram derive(const Program& program);

// Next unused generated atom name: "__aux0", "__aux1", ... The surface
// syntax reserves the '_' prefix, so generated names cannot collide with
// parsed ones, only with previously generated ones.
std::string fresh_atom(const Program& program);

// Rewrites a weight-annotated rule  (head :- body) : w  into core syntax:
// a weighted fresh atom plus a guarded rule,
//   fresh:w,   head :- body, fresh.
// Both are appended to the program and returned. Throws SemanticError when
// `fresh` already names a symbol or the weight is outside [0, 1].
std::pair<WeightedFact, Rule> rewrite_annotated_rule(Program& program, SignedAtom head,
                                                     const Rational& weight,
                                                     const std::vector<Literal>& body,
                                                     const std::string& fresh);

// Rewrites a weight-annotated disjunctive fact  (a ; b) : w  into core
// syntax: a weighted fresh atom g plus three rules,
//   g:w,   a ; b :- g.   -a :- -g.   -b :- -g.
// All are appended to the program and returned.
std::pair<WeightedFact, std::vector<Rule>> rewrite_annotated_disjunction(
    Program& program, SignedAtom a, SignedAtom b, const Rational& weight,
    const std::string& fresh);

// A plain fact stands for a weighted fact of weight exactly 1.
WeightedFact lift_plain_fact(SignedAtom atom);

} // namespace wasp

#endif
