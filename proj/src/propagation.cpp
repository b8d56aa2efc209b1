#include "wasp/propagation.hpp"

#include "wasp/error.hpp"

#include <algorithm>
#include <utility>

namespace wasp {

Pipeline analyze(Program program, std::size_t cap) {
    Pipeline p;
    p.program = std::move(program);
    p.derived = derive(p.program);
    p.models = stable_models(p.derived, p.program.symbols, cap);
    p.choices = choice_table(p.program, p.models);
    p.classes = enumerate_classes(p.models, p.program.symbols, cap);
    for (std::size_t t = 0; t < p.choices.size(); ++t) {
        const auto& entailed = p.choices.models_of[t];
        if (entailed.size() < 2) continue;
        std::vector<ThetaVar> group;
        group.reserve(entailed.size());
        for (std::size_t s : entailed)
            group.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
        p.constraints.groups.push_back(std::move(group));
    }
    return p;
}

ThetaNamer theta_namer(const Pipeline& pipeline) {
    const Pipeline* p = &pipeline;
    return [p](ThetaVar var) {
        return "theta{" +
               format_event_compressed(p->models.models.at(var.model), p->program.symbols) +
               "|" +
               format_event_compressed(p->choices.choices.at(var.choice),
                                       p->program.symbols) +
               "}";
    };
}

std::map<std::string, ThetaVar> theta_vars_by_name(const Pipeline& pipeline) {
    ThetaNamer name = theta_namer(pipeline);
    std::map<std::string, ThetaVar> out;
    for (const auto& group : pipeline.constraints.groups)
        for (ThetaVar var : group) out.emplace(name(var), var);
    return out;
}

Poly weight_sm(const Pipeline& pipeline, std::size_t model, std::size_t choice) {
    const auto& entailed = pipeline.choices.models_of.at(choice);
    if (!std::binary_search(entailed.begin(), entailed.end(), model)) return Poly();
    if (entailed.size() == 1) return Poly(1);
    return Poly::variable(
        {static_cast<std::uint32_t>(model), static_cast<std::uint32_t>(choice)});
}

Poly weight_class_given_tc(const Pipeline& pipeline, const ClassKey& key,
                           std::size_t choice) {
    if (key.inconsistent) return Poly();
    Poly sum;
    for (std::uint32_t model : key.core) sum += weight_sm(pipeline, model, choice);
    return sum;
}

Poly weight_class(const Pipeline& pipeline, const ClassKey& key) {
    Poly sum;
    for (std::size_t t = 0; t < pipeline.choices.size(); ++t) {
        Poly given = weight_class_given_tc(pipeline, key, t);
        given *= pipeline.choices.weights[t];
        sum += given;
    }
    return eliminate(sum, pipeline.constraints);
}

WeightReport propagate(const Pipeline& pipeline) {
    WeightReport report;
    std::size_t num_classes = pipeline.classes.entries.size();
    std::size_t num_choices = pipeline.choices.size();
    report.per_class_given_tc.resize(num_classes);
    report.per_event_given_tc.resize(num_classes);
    report.per_class.resize(num_classes);
    report.per_event.resize(num_classes);

    for (std::size_t k = 0; k < num_classes; ++k) {
        const ClassInfo& info = pipeline.classes.entries[k];
        Poly unconditional;
        report.per_class_given_tc[k].reserve(num_choices);
        report.per_event_given_tc[k].reserve(num_choices);
        for (std::size_t t = 0; t < num_choices; ++t) {
            Poly given = weight_class_given_tc(pipeline, info.key, t);
            unconditional += pipeline.choices.weights[t] * given;

            Poly per_event_given = info.size > 0
                                       ? Rational(1, info.size) * given
                                       : Poly();
            report.per_class_given_tc[k].push_back(
                eliminate(given, pipeline.constraints));
            report.per_event_given_tc[k].push_back(
                eliminate(per_event_given, pipeline.constraints));
        }
        unconditional = eliminate(unconditional, pipeline.constraints);
        report.per_event[k] = info.size > 0
                                  ? Rational(1, info.size) * unconditional
                                  : Poly();
        report.per_class[k] = std::move(unconditional);
        Poly contribution = report.per_event[k];
        contribution *= Rational(info.size);
        report.z += contribution;
    }

    if (!report.z.is_zero()) {
        report.prob.reserve(num_classes);
        for (std::size_t k = 0; k < num_classes; ++k)
            report.prob.push_back(RationalFn::make(report.per_event[k], report.z));
    }
    return report;
}

Poly weight_event(const Pipeline& pipeline, const WeightReport& report, EventMask event) {
    ClassKey key = class_key(event, pipeline.models);
    auto index = pipeline.classes.find(key);
    if (!index) throw SemanticError("event does not belong to any tabulated class");
    return report.per_event[*index];
}

Poly normalizer(const WeightReport& report) {
    if (report.z_is_zero())
        throw SemanticError(
            "normalizer is identically zero (the program has no stable models "
            "reachable from any total choice), so no distribution exists");
    return report.z;
}

RationalFn prob_event(const Pipeline& pipeline, const WeightReport& report,
                      EventMask event) {
    normalizer(report);
    ClassKey key = class_key(event, pipeline.models);
    auto index = pipeline.classes.find(key);
    if (!index) throw SemanticError("event does not belong to any tabulated class");
    return report.prob[*index];
}

RationalFn prob_event_set(const Pipeline& pipeline, const WeightReport& report,
                          std::vector<EventMask> events) {
    normalizer(report);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    Poly total;
    for (EventMask event : events)
        total += weight_event(pipeline, report, event);
    return RationalFn::make(total, report.z);
}

Rational prob_tc(const Pipeline& pipeline, std::size_t choice) {
    Rational total = 0;
    for (const Rational& w : pipeline.choices.weights) total += w;
    if (total == 0)
        throw SemanticError("total-choice weights sum to zero");
    return pipeline.choices.weights.at(choice) / total;
}

} // namespace wasp
