#include "wasp/data.hpp"

#include "wasp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <vector>

namespace wasp {

namespace {

// Strips a '#' comment and surrounding whitespace.
std::string clean_line(const std::string& line) {
    std::string out = line;
    if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
    auto begin = out.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = out.find_last_not_of(" \t\r\n");
    return out.substr(begin, end - begin + 1);
}

// Probability of each tabulated class at a numeric assignment.
std::vector<Rational> class_probabilities(const Pipeline& pipeline,
                                          const WeightReport& report,
                                          const ThetaAssignment& assignment) {
    ThetaNamer namer = theta_namer(pipeline);
    pipeline.constraints.validate(assignment, namer);
    if (report.z_is_zero())
        throw SemanticError("normalizer is identically zero; nothing to score");
    Rational z = report.z.eval(assignment, namer);
    if (z == 0)
        throw SemanticError("normalizer evaluates to zero at this assignment");
    std::vector<Rational> out;
    out.reserve(report.per_event.size());
    for (const Poly& weight : report.per_event)
        out.push_back(weight.eval(assignment, namer) / z);
    return out;
}

} // namespace

Dataset load_dataset(std::istream& in, const SymbolTable& universe, EventParseMode mode,
                     const std::string& source) {
    Dataset dataset;
    dataset.symbols = universe;
    dataset.source = source;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        std::string body = clean_line(line);
        if (body.empty()) continue;
        try {
            EventMask event = parse_event(body, dataset.symbols, mode);
            ++dataset.counts[event];
            ++dataset.total;
        } catch (const ParseError& e) {
            throw ParseError(source + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return dataset;
}

ScoreResult log_score(const Pipeline& pipeline, const WeightReport& report,
                      const Dataset& dataset, const ThetaAssignment& assignment) {
    std::vector<Rational> probabilities = class_probabilities(pipeline, report, assignment);
    EventMask universe = pipeline.program.universe();

    ScoreResult result;
    for (const auto& [event, count] : dataset.counts) {
        Rational p = 0;
        if (subset(event, universe)) {
            ClassKey key = class_key(event, pipeline.models);
            if (auto index = pipeline.classes.find(key)) p = probabilities[*index];
        }
        if (p == 0) {
            result.zero_prob_count += count;
        } else {
            result.log_score += static_cast<double>(count) * std::log(to_double(p));
        }
    }
    return result;
}

namespace {

// Weak compositions of `resolution` into `parts`, lexicographically
// ascending, emitted as rationals over `resolution`.
void grid_points(unsigned resolution, std::size_t parts,
                 std::vector<Rational>& prefix,
                 unsigned remaining,
                 std::vector<std::vector<Rational>>& out) {
    if (parts == 1) {
        prefix.push_back(Rational(remaining, resolution));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
        prefix.push_back(Rational(c, resolution));
        grid_points(resolution, parts - 1, prefix, remaining - c, out);
        prefix.pop_back();
    }
}

} // namespace

ThetaAssignment fit_theta(const Pipeline& pipeline, const WeightReport& report,
                          const Dataset& dataset, unsigned resolution) {
    if (resolution == 0) throw SemanticError("fit resolution must be positive");
    const auto& groups = pipeline.constraints.groups;
    if (groups.empty()) return {};

    // Per-group candidate value rows.
    std::vector<std::vector<std::vector<Rational>>> rows(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<Rational> prefix;
        grid_points(resolution, groups[g].size(), prefix, resolution, rows[g]);
    }

    // Walk the product of the group grids in lexicographic order; the first
    // candidate with (fewest misfits, best score) wins, which makes the
    // tie-break the lexicographically smallest assignment.
    std::vector<std::size_t> pick(groups.size(), 0);
    bool have_best = false;
    ScoreResult best_score;
    ThetaAssignment best;
    for (;;) {
        ThetaAssignment candidate;
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (std::size_t v = 0; v < groups[g].size(); ++v)
                candidate.emplace(groups[g][v], rows[g][pick[g]][v]);

        ScoreResult score = log_score(pipeline, report, dataset, candidate);
        bool better = !have_best ||
                      score.zero_prob_count < best_score.zero_prob_count ||
                      (score.zero_prob_count == best_score.zero_prob_count &&
                       score.log_score > best_score.log_score);
        if (better) {
            have_best = true;
            best_score = score;
            best = std::move(candidate);
        }

        // Advance the product odometer, last group fastest.
        std::size_t g = groups.size();
        for (;;) {
            if (g == 0) return best;
            --g;
            if (++pick[g] < rows[g].size()) break;
            pick[g] = 0;
        }
    }
}

Dataset sample_events(const Pipeline& pipeline, const WeightReport& report,
                      const ThetaAssignment& assignment, std::uint64_t n,
                      std::uint64_t seed) {
    std::vector<Rational> probabilities = class_probabilities(pipeline, report, assignment);

    // All consistent events in a fixed odometer order, with cumulative
    // probabilities.
    std::size_t symbols = pipeline.program.symbols.size();
    std::vector<EventMask> events;
    std::vector<double> cumulative;
    double running = 0.0;
    std::vector<int> trits(symbols, 0);
    for (;;) {
        EventMask event = 0;
        for (std::size_t i = 0; i < symbols; ++i) {
            if (trits[i] == 1) event |= pos_bit(i);
            if (trits[i] == 2) event |= neg_bit(i);
        }
        ClassKey key = class_key(event, pipeline.models);
        running += to_double(probabilities[pipeline.classes.index_of(key)]);
        events.push_back(event);
        cumulative.push_back(running);

        std::size_t pos = 0;
        while (pos < symbols && trits[pos] == 2) trits[pos++] = 0;
        if (pos == symbols) break;
        ++trits[pos];
    }

    Dataset dataset;
    dataset.symbols = pipeline.program.symbols;
    dataset.source = "<sample>";
    dataset.total = n;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t index = it == cumulative.end() ? events.size() - 1
                                                   : static_cast<std::size_t>(
                                                         it - cumulative.begin());
        ++dataset.counts[events[index]];
    }
    return dataset;
}

std::string theta_to_json(const Pipeline& pipeline, const ThetaAssignment& assignment) {
    ThetaNamer namer = theta_namer(pipeline);
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& group : pipeline.constraints.groups)
        for (ThetaVar var : group)
            if (auto it = assignment.find(var); it != assignment.end())
                out[namer(var)] = to_fraction_string(it->second);
    return out.dump(2) + "\n";
}

ThetaAssignment parse_theta_json(const Pipeline& pipeline, const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed theta JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw ParseError("theta JSON must be an object");

    std::map<std::string, ThetaVar> by_name = theta_vars_by_name(pipeline);
    ThetaAssignment assignment;
    for (const auto& [key, value] : parsed.items()) {
        auto var = by_name.find(key);
        if (var == by_name.end())
            throw SemanticError("unknown theta parameter '" + key + "'");
        Rational rational;
        if (value.is_string())
            rational = parse_rational(value.get<std::string>());
        else if (value.is_number_integer())
            rational = Rational(value.get<long long>());
        else
            throw ParseError("theta value for '" + key +
                             "' must be a rational string like \"9/10\" or \"0.9\"");
        assignment.emplace(var->second, rational);
    }

    ThetaNamer namer = theta_namer(pipeline);
    assignment = pipeline.constraints.complete(std::move(assignment), namer);
    pipeline.constraints.validate(assignment, namer);
    return assignment;
}

} // namespace wasp
