#include "wasp/choices.hpp"

#include "wasp/error.hpp"

#include <set>

namespace wasp {

std::vector<EventMask> total_choices(const Program& program) {
    std::set<std::uint32_t> symbols;
    for (const auto& wf : program.weighted_facts)
        if (!symbols.insert(wf.atom.symbol).second)
            throw SemanticError("multiple weighted facts annotate symbol '" +
                                program.symbols.name(wf.atom.symbol) + "'");

    std::vector<EventMask> choices{0};
    for (const auto& wf : program.weighted_facts) {
        std::vector<EventMask> extended;
        extended.reserve(choices.size() * 2);
        for (EventMask t : choices) {
            extended.push_back(t | wf.atom.mask());
            extended.push_back(t | wf.atom.complement().mask());
        }
        choices = std::move(extended);
    }
    return choices;
}

Rational weight_tc(const Program& program, EventMask t) {
    Rational weight = 1;
    for (const auto& wf : program.weighted_facts) {
        if (subset(wf.atom.mask(), t))
            weight *= wf.weight;
        else if (subset(wf.atom.complement().mask(), t))
            weight *= Rational(1) - wf.weight;
        else
            throw SemanticError("total choice does not select a polarity for '" +
                                program.symbols.name(wf.atom.symbol) + "'");
    }
    return weight;
}

std::vector<std::size_t> models_of_tc(EventMask t, const StableModelSet& models) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < models.models.size(); ++i)
        if (subset(t, models.models[i])) out.push_back(i);
    return out;
}

ChoiceTable choice_table(const Program& program, const StableModelSet& models) {
    ChoiceTable table;
    table.choices = total_choices(program);
    table.weights.reserve(table.choices.size());
    table.models_of.reserve(table.choices.size());
    for (EventMask t : table.choices) {
        table.weights.push_back(weight_tc(program, t));
        table.models_of.push_back(models_of_tc(t, models));
    }
    return table;
}

} // namespace wasp
