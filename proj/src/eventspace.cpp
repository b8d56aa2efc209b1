#include "wasp/eventspace.hpp"

#include "wasp/error.hpp"

#include <algorithm>

namespace wasp {

namespace {

// Beyond this many stable models the 2^m unrealized cores are not
// materialized (and the full lattice cannot be drawn).
constexpr std::size_t kMaxMaterializedModels = 12;

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

bool class_key_less(const ClassKey& a, const ClassKey& b) {
    if (a.inconsistent != b.inconsistent) return a.inconsistent;
    if (a.core.size() != b.core.size()) return a.core.size() < b.core.size();
    return a.core < b.core;
}

std::size_t ClassTable::index_of(const ClassKey& key) const {
    auto found = find(key);
    if (!found) throw SemanticError("class key does not occur in the class table");
    return *found;
}

std::optional<std::size_t> ClassTable::find(const ClassKey& key) const {
    if (key.inconsistent) return 0;
    auto it = core_index.find(key.core);
    if (it == core_index.end()) return std::nullopt;
    return it->second;
}

bool is_consistent_event(EventMask event) {
    return consistent(event);
}

StableCore stable_core(EventMask event, const StableModelSet& models) {
    if (!consistent(event))
        throw SemanticError("stable core of an inconsistent event is undefined");
    StableCore core;
    for (std::size_t i = 0; i < models.models.size(); ++i) {
        EventMask s = models.models[i];
        if (subset(s, event) || subset(event, s))
            core.push_back(static_cast<std::uint32_t>(i));
    }
    return core;
}

ClassKey class_key(EventMask event, const StableModelSet& models) {
    if (!consistent(event)) return ClassKey::bottom();
    return {false, stable_core(event, models)};
}

ClassTable enumerate_classes(const StableModelSet& models, const SymbolTable& symbols,
                             std::size_t cap) {
    std::size_t n = symbols.size();
    if (std::size_t limit = effective_symbol_cap(cap); n > limit)
        throw CapError("class enumeration over " + std::to_string(n) +
                       " symbols exceeds the enumeration cap of " + std::to_string(limit) +
                       " (override with WASP_MAX_SYMBOLS or a cap argument)");

    std::map<StableCore, ClassInfo> classes;
    if (models.size() <= kMaxMaterializedModels) {
        // Materialize every subset of the model set so unrealized cores
        // appear with size 0.
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << models.size()); ++bits) {
            StableCore core;
            for (std::size_t i = 0; i < models.size(); ++i)
                if (bits & (std::uint64_t{1} << i))
                    core.push_back(static_cast<std::uint32_t>(i));
            classes.emplace(core, ClassInfo{{false, core}, 0, std::nullopt});
        }
    }

    // Odometer over the 3^n consistent events: per symbol absent, positive,
    // or negative.
    std::vector<int> trits(n, 0);
    for (;;) {
        EventMask event = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (trits[i] == 1) event |= pos_bit(i);
            if (trits[i] == 2) event |= neg_bit(i);
        }
        StableCore core = stable_core(event, models);
        auto [it, inserted] = classes.try_emplace(core, ClassInfo{{false, core}, 0, std::nullopt});
        ClassInfo& info = it->second;
        ++info.size;
        if (!info.sample || event_less(event, *info.sample, symbols)) info.sample = event;

        std::size_t pos = 0;
        while (pos < n && trits[pos] == 2) trits[pos++] = 0;
        if (pos == n) break;
        ++trits[pos];
    }

    ClassInfo bottom{ClassKey::bottom(), pow_u64(4, n) - pow_u64(3, n), std::nullopt};
    if (n > 0) {
        EventMask least = pos_bit(0) | neg_bit(0);
        for (std::size_t i = 1; i < n; ++i) {
            EventMask candidate = pos_bit(i) | neg_bit(i);
            if (event_less(candidate, least, symbols)) least = candidate;
        }
        bottom.sample = least;
    }

    ClassTable table;
    table.entries.push_back(std::move(bottom));
    for (auto& [core, info] : classes) table.entries.push_back(std::move(info));
    std::sort(table.entries.begin(), table.entries.end(),
              [](const ClassInfo& a, const ClassInfo& b) {
                  return class_key_less(a.key, b.key);
              });
    for (std::size_t i = 0; i < table.entries.size(); ++i)
        if (!table.entries[i].key.inconsistent)
            table.core_index.emplace(table.entries[i].key.core, i);
    return table;
}

} // namespace wasp
