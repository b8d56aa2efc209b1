#include "wasp/transform.hpp"

#include "wasp/error.hpp"

#include <cctype>

namespace wasp {

namespace {

bool valid_fresh_name(const std::string& name) {
    if (name.empty()) return false;
    char first = name[0];
    if (!std::islower(static_cast<unsigned char>(first)) && first != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

SignedAtom intern_fresh(Program& program, const std::string& fresh) {
    if (!valid_fresh_name(fresh))
        throw SemanticError("malformed fresh atom name '" + fresh + "'");
    if (program.symbols.find(fresh))
        throw SemanticError("fresh atom '" + fresh + "' already occurs in the program");
    if (program.symbols.size() >= kMaxUniverseSymbols)
        throw SemanticError("cannot add fresh atom: universe already holds " +
                            std::to_string(kMaxUniverseSymbols) + " symbols");
    return {static_cast<std::uint32_t>(program.symbols.intern(fresh)), false};
}

void check_weight(const Rational& weight) {
    if (weight < 0 || weight > 1)
        throw SemanticError("weight " + to_fraction_string(weight) + " outside [0, 1]");
}

} // namespace

DerivedProgram derive(const Program& program) {
    DerivedProgram dp;
    dp.symbols = program.symbols;
    for (const auto& wf : program.weighted_facts) {
        Rule disjunction;
        disjunction.head = wf.atom.mask() | wf.atom.complement().mask();
        dp.rules.push_back(disjunction);
        dp.choice_atoms.push_back(wf.atom);
    }
    for (const Rule& r : program.rules) dp.rules.push_back(r);
    return dp;
}

std::string fresh_atom(const Program& program) {
    for (std::size_t n = 0;; ++n) {
        std::string candidate = "__aux" + std::to_string(n);
        if (!program.symbols.find(candidate)) return candidate;
    }
}

std::pair<WeightedFact, Rule> rewrite_annotated_rule(Program& program, SignedAtom head,
                                                     const Rational& weight,
                                                     const std::vector<Literal>& body,
                                                     const std::string& fresh) {
    check_weight(weight);
    SignedAtom guard = intern_fresh(program, fresh);

    WeightedFact wf{guard, weight};
    Rule rule;
    rule.head = head.mask();
    for (const Literal& l : body) (l.naf ? rule.naf : rule.body) |= l.atom.mask();
    rule.body |= guard.mask();

    program.weighted_facts.push_back(wf);
    program.rules.push_back(rule);
    return {wf, rule};
}

std::pair<WeightedFact, std::vector<Rule>> rewrite_annotated_disjunction(
    Program& program, SignedAtom a, SignedAtom b, const Rational& weight,
    const std::string& fresh) {
    check_weight(weight);
    SignedAtom guard = intern_fresh(program, fresh);

    WeightedFact wf{guard, weight};
    std::vector<Rule> rules;
    Rule choice;
    choice.head = a.mask() | b.mask();
    choice.body = guard.mask();
    rules.push_back(choice);
    for (SignedAtom atom : {a, b}) {
        Rule blocked;
        blocked.head = atom.complement().mask();
        blocked.body = guard.complement().mask();
        rules.push_back(blocked);
    }

    program.weighted_facts.push_back(wf);
    for (const Rule& r : rules) program.rules.push_back(r);
    return {wf, rules};
}

WeightedFact lift_plain_fact(SignedAtom atom) {
    return {atom, Rational(1)};
}

} // namespace wasp
