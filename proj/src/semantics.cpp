#include "wasp/semantics.hpp"

#include "wasp/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace wasp {

namespace {

constexpr std::size_t kDefaultSymbolCap = 12;

// Next mask with the same popcount (Gosper). 0 when exhausted within width.
EventMask next_same_popcount(EventMask v, EventMask limit) {
    EventMask c = v & (0 - v);
    EventMask r = v + c;
    EventMask next = (((r ^ v) >> 2) / c) | r;
    return next > limit ? 0 : next;
}

void check_cap(std::size_t symbols, std::size_t cap, const char* what) {
    if (symbols > cap)
        throw CapError(std::string(what) + " over " + std::to_string(symbols) +
                       " symbols exceeds the enumeration cap of " + std::to_string(cap) +
                       " (override with WASP_MAX_SYMBOLS or a cap argument)");
}

} // namespace

std::size_t effective_symbol_cap(std::size_t override_cap) {
    if (override_cap > 0) return std::min(override_cap, kMaxUniverseSymbols);
    if (const char* env = std::getenv("WASP_MAX_SYMBOLS")) {
        char* end = nullptr;
        unsigned long value = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && value > 0)
            return std::min<std::size_t>(value, kMaxUniverseSymbols);
    }
    return kDefaultSymbolCap;
}

DerivedProgram reduct(const DerivedProgram& dp, EventMask x) {
    DerivedProgram out;
    out.symbols = dp.symbols;
    out.choice_atoms = dp.choice_atoms;
    for (const Rule& r : dp.rules) {
        if (r.naf & x) continue;
        out.rules.push_back({r.head, r.body, 0});
    }
    return out;
}

bool is_model(const DerivedProgram& naf_free, EventMask x) {
    for (const Rule& r : naf_free.rules) {
        if (r.naf != 0)
            throw SemanticError("is_model requires a naf-free program");
        if (subset(r.body, x) && (r.head & x) == 0) return false;
    }
    return true;
}

std::vector<EventMask> minimal_models(const DerivedProgram& naf_free, std::size_t cap) {
    std::size_t n = naf_free.symbols.size();
    check_cap(n, effective_symbol_cap(cap), "minimal-model enumeration");

    EventMask limit = naf_free.universe();
    std::vector<EventMask> accepted;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        EventMask x = k == 0 ? 0 : (EventMask{1} << k) - 1;
        for (;;) {
            bool pruned = false;
            for (EventMask m : accepted) {
                if (subset(m, x)) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned && is_model(naf_free, x)) accepted.push_back(x);
            if (k == 0) break;
            x = next_same_popcount(x, limit);
            if (x == 0) break;
        }
    }
    return accepted;
}

StableModelSet stable_models(const DerivedProgram& dp, const SymbolTable& symbols,
                             std::size_t cap) {
    std::size_t n = symbols.size();
    check_cap(n, effective_symbol_cap(cap), "stable-model enumeration");

    bool has_naf = false;
    for (const Rule& r : dp.rules)
        if (r.naf != 0) has_naf = true;

    std::vector<EventMask> found;
    if (!has_naf) {
        found = minimal_models(dp, cap);
    } else {
        EventMask limit = dp.universe();
        for (EventMask x = 0;; ++x) {
            DerivedProgram r = reduct(dp, x);
            if (is_model(r, x)) {
                // x must also be minimal among the reduct's models.
                bool minimal = true;
                if (x != 0) {
                    for (EventMask sub = (x - 1) & x;; sub = (sub - 1) & x) {
                        if (is_model(r, sub)) {
                            minimal = false;
                            break;
                        }
                        if (sub == 0) break;
                    }
                }
                if (minimal) found.push_back(x);
            }
            if (x == limit) break;
        }
    }

    for (EventMask m : found) {
        if (!consistent(m))
            throw SemanticError("inconsistent stable model {" +
                                format_event(m, symbols) +
                                "}: both polarities of a symbol were derived");
    }

    std::sort(found.begin(), found.end(),
              [&symbols](EventMask a, EventMask b) { return event_less(a, b, symbols); });

    StableModelSet out;
    out.models = std::move(found);
    for (std::size_t i = 0; i < out.models.size(); ++i) out.index[out.models[i]] = i;
    return out;
}

StableModelSet stable_models(const Program& program, std::size_t cap) {
    return stable_models(derive(program), program.symbols, cap);
}

} // namespace wasp
