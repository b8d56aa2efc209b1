#ifndef WASP_SYNTAX_HPP
#define WASP_SYNTAX_HPP

#include "wasp/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wasp {

// ---------------------------------------------------------------------------
// Atoms and events.
//
// A program's universe is a set of symbols; each symbol contributes two
// atoms, the positive one and its classical negation. Sets of atoms (rule
// heads, rule bodies, interpretations, events) are bitmasks: bit 2*i is the
// positive atom of symbol i, bit 2*i+1 the negated one. That caps the
// universe at 31 symbols, far above the enumeration guard rails.
// ---------------------------------------------------------------------------

using EventMask = std::uint64_t;

constexpr std::size_t kMaxUniverseSymbols = 31;

constexpr EventMask pos_bit(std::size_t symbol) { return EventMask{1} << (2 * symbol); }
constexpr EventMask neg_bit(std::size_t symbol) { return EventMask{1} << (2 * symbol + 1); }

// Mask of every atom over `count` symbols.
constexpr EventMask universe_mask(std::size_t count) {
    return count == 0 ? 0 : (EventMask{1} << (2 * count)) - 1;
}

inline bool subset(EventMask inner, EventMask outer) { return (inner & ~outer) == 0; }
std::size_t atom_count(EventMask set);

// True when no symbol occurs with both polarities.
bool consistent(EventMask set);

// Swaps the polarity of every atom in the set.
EventMask flip_polarity(EventMask set);

struct SignedAtom {
    std::uint32_t symbol = 0;
    bool negated = false;

    EventMask mask() const { return negated ? neg_bit(symbol) : pos_bit(symbol); }
    SignedAtom complement() const { return {symbol, !negated}; }
    friend auto operator<=>(const SignedAtom&, const SignedAtom&) = default;
};

// Interned symbol names. Append-only so atom masks stay valid when a
// permissive parse extends the universe.
class SymbolTable {
public:
    std::size_t intern(const std::string& name);
    std::optional<std::size_t> find(std::string_view name) const;
    const std::string& name(std::size_t index) const { return names_.at(index); }
    std::size_t size() const { return names_.size(); }

    friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Rules and programs.
// ---------------------------------------------------------------------------

// Body literal: a signed atom, possibly under default negation.
struct Literal {
    SignedAtom atom;
    bool naf = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// head_1 ; ... ; head_k :- body_1, ..., not body_n.
// `body` holds the plain literals' atoms, `naf` the default-negated ones.
// Heads and bodies are sets, so duplicates collapse structurally.
struct Rule {
    EventMask head = 0;
    EventMask body = 0;
    EventMask naf = 0;

    bool is_fact() const { return body == 0 && naf == 0 && head != 0; }
    bool is_constraint() const { return head == 0; }
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct WeightedFact {
    SignedAtom atom;
    Rational weight;

    friend bool operator==(const WeightedFact&, const WeightedFact&) = default;
};

struct Program {
    SymbolTable symbols;
    std::vector<WeightedFact> weighted_facts;
    std::vector<Rule> rules; // every clause, source order, facts included

    EventMask universe() const { return universe_mask(symbols.size()); }
    std::vector<Rule> facts() const;

    friend bool operator==(const Program&, const Program&) = default;
};

// ---------------------------------------------------------------------------
// Surface text.
// ---------------------------------------------------------------------------

// Parses the textual program format:
//   0.3 :: a.            weighted fact (weight in [0,1], decimal or p/q)
//   b ; c :- a, not d.   rule (disjunctive head, body with default negation)
//   -e.                  fact on a classically negated atom
//   :- a, b.             constraint
//   % comment
// Identifiers match [a-z][a-zA-Z0-9_]*; `not` is reserved; names starting
// with an underscore are reserved for generated atoms. Diagnostics carry
// 1-based line/column.
Program parse_program(std::string_view text);

// Renders a program in the same format: weighted facts first, then rules,
// each group in source order. parse_program(format_program(p)) == p.
std::string format_program(const Program& program);

// One rule in surface syntax, without the trailing newline.
std::string format_rule(const Rule& rule, const SymbolTable& symbols);

// Weight rendering: finite decimal when the denominator divides a power of
// ten (0.3), fraction otherwise (1/3).
std::string format_weight(const Rational& weight);

enum class EventParseMode {
    strict, // unknown symbols are errors
    extend, // unknown symbols are appended to the table
};

// Parses whitespace-separated signed atoms ("a -b c") into an event.
// "{}" denotes the empty event. Events may be inconsistent ("a -a").
EventMask parse_event(std::string_view text, SymbolTable& symbols,
                      EventParseMode mode = EventParseMode::strict);

// "a b -c" rendering: positive atoms sorted by name, then negated atoms
// sorted by name with a leading '-'. The empty event renders as "{}".
std::string format_event(EventMask event, const SymbolTable& symbols);

// Compressed rendering used inside core and variable labels: same order,
// no separators ("ab", "a-b"). The empty event renders as "{}".
std::string format_event_compressed(EventMask event, const SymbolTable& symbols);

// Canonical event order: smaller size first, then token order (positives
// before negations, names alphabetically).
bool event_less(EventMask a, EventMask b, const SymbolTable& symbols);

} // namespace wasp

#endif
