#include "wasp/report_io.hpp"

#include "wasp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wasp {

namespace {

EventMask aux_atom_mask(const SymbolTable& symbols) {
    EventMask mask = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (!symbols.name(i).empty() && symbols.name(i)[0] == '_')
            mask |= pos_bit(i) | neg_bit(i);
    return mask;
}

// Rows of already-rendered cells -> aligned pretty table or TSV.
std::string layout_table(const std::vector<std::vector<std::string>>& rows,
                         OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::tsv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "\t" : "") << row[i];
            out << "\n";
        }
        return out.str();
    }
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) line += "  ";
            line += rows[r][i];
            if (i + 1 < rows[r].size())
                line.append(widths[i] - rows[r][i].size(), ' ');
        }
        out << line << "\n";
        if (r == 0) {
            for (std::size_t i = 0; i < widths.size(); ++i)
                out << (i ? "  " : "") << std::string(widths[i], '-');
            out << "\n";
        }
    }
    return out.str();
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::string render_rational(const Rational& value, const RenderOptions& options) {
    if (options.approx) return to_decimal_string(value, options.digits);
    return to_fraction_string(value);
}

std::string render_poly(const Poly& poly, const ThetaNamer& namer,
                        const RenderOptions& options) {
    if (poly.is_constant()) return render_rational(poly.constant_value(), options);
    return poly.to_string(namer);
}

std::string render_prob(const RationalFn& fn, const ThetaNamer& namer,
                        const RenderOptions& options) {
    if (fn.den == Poly(1) && fn.num.is_constant())
        return render_rational(fn.num.constant_value(), options);
    return fn.to_string(namer);
}

std::string display_event(EventMask event, const SymbolTable& symbols,
                          const RenderOptions& options) {
    if (options.hide_aux) event &= ~aux_atom_mask(symbols);
    return format_event(event, symbols);
}

std::string class_label(const ClassKey& key, const Pipeline& pipeline,
                        const RenderOptions& options) {
    if (key.inconsistent) return "bot";
    std::string out = "{";
    for (std::size_t i = 0; i < key.core.size(); ++i) {
        if (i) out += ",";
        EventMask model = pipeline.models.models.at(key.core[i]);
        if (options.hide_aux) model &= ~aux_atom_mask(pipeline.program.symbols);
        out += format_event_compressed(model, pipeline.program.symbols);
    }
    return out + "}";
}

std::string render_models(const Pipeline& pipeline, const RenderOptions& options) {
    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (EventMask model : pipeline.models.models)
            out.push_back(display_event(model, pipeline.program.symbols, options));
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    for (EventMask model : pipeline.models.models)
        out << display_event(model, pipeline.program.symbols, options) << "\n";
    return out.str();
}

std::string render_choice_table(const Pipeline& pipeline, const RenderOptions& options) {
    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < pipeline.choices.size(); ++t) {
            nlohmann::ordered_json row;
            row["choice"] =
                display_event(pipeline.choices.choices[t], pipeline.program.symbols, options);
            row["weight"] = render_rational(pipeline.choices.weights[t], options);
            nlohmann::ordered_json models = nlohmann::ordered_json::array();
            for (std::size_t s : pipeline.choices.models_of[t])
                models.push_back(format_event_compressed(pipeline.models.models[s],
                                                         pipeline.program.symbols));
            row["models"] = std::move(models);
            out.push_back(std::move(row));
        }
        return out.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows{{"choice", "weight", "models"}};
    for (std::size_t t = 0; t < pipeline.choices.size(); ++t) {
        std::string models;
        for (std::size_t s : pipeline.choices.models_of[t]) {
            if (!models.empty()) models += ",";
            models += format_event_compressed(pipeline.models.models[s],
                                              pipeline.program.symbols);
        }
        rows.push_back({display_event(pipeline.choices.choices[t], pipeline.program.symbols,
                                      options),
                        render_rational(pipeline.choices.weights[t], options),
                        models.empty() ? "-" : models});
    }
    return layout_table(rows, options.format);
}

std::string render_class_table(const Pipeline& pipeline, const RenderOptions& options) {
    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const ClassInfo& info : pipeline.classes.entries) {
            nlohmann::ordered_json row;
            row["core"] = class_label(info.key, pipeline, options);
            row["size"] = info.size;
            if (info.sample)
                row["sample"] =
                    display_event(*info.sample, pipeline.program.symbols, options);
            else
                row["sample"] = nullptr;
            out.push_back(std::move(row));
        }
        return out.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows{{"core", "size", "sample"}};
    for (const ClassInfo& info : pipeline.classes.entries)
        rows.push_back({class_label(info.key, pipeline, options),
                        std::to_string(info.size),
                        info.sample
                            ? display_event(*info.sample, pipeline.program.symbols, options)
                            : "-"});
    return layout_table(rows, options.format);
}

std::string render_weight_table(const Pipeline& pipeline, const WeightReport& report,
                                const RenderOptions& options) {
    normalizer(report); // surface the degenerate-program error up front
    ThetaNamer namer = theta_namer(pipeline);

    // The check row: sizes must total 4^n, and size-weighted probabilities
    // must total exactly 1.
    std::uint64_t size_total = 0;
    Poly prob_weighted_total;
    for (std::size_t k = 0; k < pipeline.classes.entries.size(); ++k) {
        size_total += pipeline.classes.entries[k].size;
        Poly contribution = report.per_event[k];
        contribution *= Rational(pipeline.classes.entries[k].size);
        prob_weighted_total += contribution;
    }
    RationalFn prob_total = RationalFn::make(prob_weighted_total, report.z);
    std::uint64_t expected_total = pow_u64(4, pipeline.program.symbols.size());

    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out;
        nlohmann::ordered_json classes = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < pipeline.classes.entries.size(); ++k) {
            const ClassInfo& info = pipeline.classes.entries[k];
            nlohmann::ordered_json row;
            row["core"] = class_label(info.key, pipeline, options);
            row["size"] = info.size;
            row["w_class"] = render_poly(report.per_class[k], namer, options);
            row["w_event"] = render_poly(report.per_event[k], namer, options);
            row["prob"] = render_prob(report.prob[k], namer, options);
            classes.push_back(std::move(row));
        }
        out["classes"] = std::move(classes);
        out["z"] = render_poly(report.z, namer, options);
        nlohmann::ordered_json check;
        check["size_total"] = size_total;
        check["size_expected"] = expected_total;
        check["prob_total"] = render_prob(prob_total, namer, options);
        out["check"] = std::move(check);
        return out.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows{{"core", "size", "w_R", "w_E", "Pr_E"}};
    for (std::size_t k = 0; k < pipeline.classes.entries.size(); ++k) {
        const ClassInfo& info = pipeline.classes.entries[k];
        rows.push_back({class_label(info.key, pipeline, options),
                        std::to_string(info.size),
                        render_poly(report.per_class[k], namer, options),
                        render_poly(report.per_event[k], namer, options),
                        render_prob(report.prob[k], namer, options)});
    }
    rows.push_back({"total", std::to_string(size_total) + "/" +
                                 std::to_string(expected_total),
                    "Z = " + render_poly(report.z, namer, options), "",
                    render_prob(prob_total, namer, options)});
    return layout_table(rows, options.format);
}

std::string render_score(const ScoreResult& result, const RenderOptions& options) {
    std::ostringstream value;
    value << std::fixed << std::setprecision(6) << result.log_score;
    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out;
        out["log_score"] = result.log_score;
        out["zero_prob_count"] = result.zero_prob_count;
        return out.dump(2) + "\n";
    }
    if (options.format == OutputFormat::tsv)
        return "log_score\tzero_prob_count\n" + value.str() + "\t" +
               std::to_string(result.zero_prob_count) + "\n";
    return "log_score        " + value.str() + "\nzero_prob_count  " +
           std::to_string(result.zero_prob_count) + "\n";
}

std::string render_dataset(const Dataset& dataset, const RenderOptions& options) {
    std::vector<EventMask> order;
    order.reserve(dataset.counts.size());
    for (const auto& [event, count] : dataset.counts) order.push_back(event);
    std::sort(order.begin(), order.end(), [&dataset](EventMask a, EventMask b) {
        return event_less(a, b, dataset.symbols);
    });

    if (options.format == OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (EventMask event : order)
            out[display_event(event, dataset.symbols, options)] = dataset.counts.at(event);
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    for (EventMask event : order) {
        std::string line = display_event(event, dataset.symbols, options);
        for (std::uint64_t i = 0; i < dataset.counts.at(event); ++i) out << line << "\n";
    }
    return out.str();
}

std::string emit_lattice_dot(const Pipeline& pipeline, const WeightReport& report,
                             const RenderOptions& options) {
    std::size_t m = pipeline.models.size();
    if (m > 12)
        throw CapError("core lattice with 2^" + std::to_string(m) +
                       " nodes is past drawing scale");
    ThetaNamer namer = theta_namer(pipeline);

    std::ostringstream out;
    out << "digraph core_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t k = 0; k < pipeline.classes.entries.size(); ++k) {
        const ClassInfo& info = pipeline.classes.entries[k];
        std::string id;
        if (info.key.inconsistent) {
            id = "bot";
        } else {
            std::uint64_t bits = 0;
            for (std::uint32_t model : info.key.core) bits |= std::uint64_t{1} << model;
            id = "c" + std::to_string(bits);
        }
        out << "  " << id << " [label=\"" << class_label(info.key, pipeline, options)
            << "\\n#" << info.size << "  w_R = "
            << render_poly(report.per_class[k], namer, options) << "\"];\n";
    }
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        for (std::size_t model = 0; model < m; ++model) {
            if (!(bits & (std::uint64_t{1} << model))) continue;
            out << "  c" << (bits & ~(std::uint64_t{1} << model)) << " -> c" << bits
                << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace wasp
