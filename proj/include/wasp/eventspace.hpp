#ifndef WASP_EVENTSPACE_HPP
#define WASP_EVENTSPACE_HPP

#include "wasp/semantics.hpp"
#include "wasp/syntax.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wasp {

// Stable core of an event: the models it contains or is contained in.
// Sorted model-ids.
using StableCore = std::vector<std::uint32_t>;

// Partition key over all events: the inconsistent class collects events
// with clashing polarities, every other event belongs to its core's class.
struct ClassKey {
    bool inconsistent = false;
    StableCore core; // empty when inconsistent

    static ClassKey bottom() { return {true, {}}; }
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

// Canonical class order: the inconsistent class first, then cores by size,
// then lexicographically by model-id.
bool class_key_less(const ClassKey& a, const ClassKey& b);

struct ClassInfo {
    ClassKey key;
    std::uint64_t size = 0;                 // number of events in the class
    std::optional<EventMask> sample;        // canonically least member event
};

struct ClassTable {
    std::vector<ClassInfo> entries; // canonical order; entry 0 is the
                                    // inconsistent class
    std::map<StableCore, std::size_t> core_index;

    std::size_t index_of(const ClassKey& key) const; // throws on unknown core
    std::optional<std::size_t> find(const ClassKey& key) const;
};

bool is_consistent_event(EventMask event);

// { s in M : s ⊆ e or e ⊆ s }. The event must be consistent.
StableCore stable_core(EventMask event, const StableModelSet& models);

ClassKey class_key(EventMask event, const StableModelSet& models);

// Exact census of every class: consistent events enumerated exhaustively
// (3^n), the inconsistent size by the 4^n - 3^n formula. Unrealized cores
// are kept with size 0 while 2^m stays at desk scale (m <= 12 models).
ClassTable enumerate_classes(const StableModelSet& models, const SymbolTable& symbols,
                             std::size_t cap = 0);

} // namespace wasp

#endif
