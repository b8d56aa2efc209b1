#include "wasp/syntax.hpp"

#include "wasp/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

namespace wasp {

std::size_t atom_count(EventMask set) {
    return static_cast<std::size_t>(std::popcount(set));
}

bool consistent(EventMask set) {
    constexpr EventMask kPositive = 0x5555555555555555ull;
    return ((set & kPositive) & ((set >> 1) & kPositive)) == 0;
}

EventMask flip_polarity(EventMask set) {
    constexpr EventMask kPositive = 0x5555555555555555ull;
    return ((set & kPositive) << 1) | ((set >> 1) & kPositive);
}

std::size_t SymbolTable::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    names_.push_back(name);
    index_.emplace(name, names_.size() - 1);
    return names_.size() - 1;
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Rule> Program::facts() const {
    std::vector<Rule> out;
    for (const Rule& r : rules)
        if (r.is_fact()) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// Lexer.
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    ident,
    number,
    weight_sep, // ::
    arrow,      // :-
    dot,
    semicolon,
    comma,
    minus,
    slash,
    kw_not,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            if (pos_ >= text_.size()) break;
            out.push_back(next());
        }
        out.push_back({Tok::end, "", line_, column_});
        return out;
    }

private:
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        int line = line_, column = column_;
        char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string word = take_word();
            if (word == "not") return {Tok::kw_not, word, line, column};
            return {Tok::ident, word, line, column};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = take_number();
            return {Tok::number, num, line, column};
        }
        switch (c) {
        case ':':
            advance();
            if (pos_ < text_.size() && text_[pos_] == ':') {
                advance();
                return {Tok::weight_sep, "::", line, column};
            }
            if (pos_ < text_.size() && text_[pos_] == '-') {
                advance();
                return {Tok::arrow, ":-", line, column};
            }
            throw ParseError("expected '::' or ':-'", line, column);
        case '.':
            advance();
            return {Tok::dot, ".", line, column};
        case ';':
            advance();
            return {Tok::semicolon, ";", line, column};
        case ',':
            advance();
            return {Tok::comma, ",", line, column};
        case '-':
            advance();
            return {Tok::minus, "-", line, column};
        case '/':
            advance();
            return {Tok::slash, "/", line, column};
        case '_':
            throw ParseError("names starting with '_' are reserved for generated atoms",
                             line, column);
        default:
            if (std::isupper(static_cast<unsigned char>(c)))
                throw ParseError("atom names start with a lowercase letter", line, column);
            throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        }
    }

    std::string take_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                advance();
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string take_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            advance();
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser. Statements are parsed with string atoms first; the symbol table is
// built from the full name set (sorted) so bit layout is deterministic.
// ---------------------------------------------------------------------------

struct PAtom {
    bool negated;
    std::string name;
    int line;
    int column;
};

struct PLiteral {
    bool naf;
    PAtom atom;
};

struct PRule {
    std::vector<PAtom> head;
    std::vector<PLiteral> body;
};

struct PWeightedFact {
    std::string weight_text;
    int weight_line;
    int weight_column;
    PAtom atom;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Program run() {
        while (!at(Tok::end)) statement();
        return lower();
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok kind) const { return peek().kind == kind; }

    Token expect(Tok kind, const std::string& what) {
        if (!at(kind))
            throw ParseError("expected " + what, peek().line, peek().column);
        return tokens_[pos_++];
    }

    void statement() {
        if (at(Tok::number)) {
            weighted_fact();
        } else {
            rule();
        }
    }

    void weighted_fact() {
        Token num = tokens_[pos_++];
        std::string text = num.text;
        if (at(Tok::slash)) {
            ++pos_;
            Token den = expect(Tok::number, "a denominator");
            text += "/" + den.text;
        }
        expect(Tok::weight_sep, "'::'");
        PAtom atom = signed_atom();
        expect(Tok::dot, "'.'");
        wfacts_.push_back({text, num.line, num.column, atom});
    }

    void rule() {
        PRule r;
        if (!at(Tok::arrow)) {
            r.head.push_back(signed_atom());
            while (at(Tok::semicolon)) {
                ++pos_;
                r.head.push_back(signed_atom());
            }
        }
        if (at(Tok::arrow)) {
            ++pos_;
            r.body.push_back(literal());
            while (at(Tok::comma)) {
                ++pos_;
                r.body.push_back(literal());
            }
        } else if (r.head.empty()) {
            throw ParseError("expected a rule or a weighted fact", peek().line,
                             peek().column);
        }
        expect(Tok::dot, "'.'");
        rules_.push_back(std::move(r));
    }

    PLiteral literal() {
        bool naf = false;
        if (at(Tok::kw_not)) {
            ++pos_;
            naf = true;
        }
        return {naf, signed_atom()};
    }

    PAtom signed_atom() {
        bool negated = false;
        int line = peek().line, column = peek().column;
        if (at(Tok::minus)) {
            ++pos_;
            negated = true;
        }
        if (at(Tok::kw_not))
            throw ParseError("'not' is a keyword", peek().line, peek().column);
        Token name = expect(Tok::ident, "an atom name");
        return {negated, name.text, line, column};
    }

    Program lower() {
        std::set<std::string> names;
        for (const auto& wf : wfacts_) names.insert(wf.atom.name);
        for (const auto& r : rules_) {
            for (const auto& a : r.head) names.insert(a.name);
            for (const auto& l : r.body) names.insert(l.atom.name);
        }
        if (names.size() > kMaxUniverseSymbols)
            throw ParseError("program uses " + std::to_string(names.size()) +
                             " symbols; at most " +
                             std::to_string(kMaxUniverseSymbols) + " are supported");

        Program p;
        for (const auto& n : names) p.symbols.intern(n);

        std::set<std::pair<std::string, bool>> seen;
        std::set<std::string> annotated_symbols;
        for (const auto& wf : wfacts_) {
            Rational w;
            try {
                w = parse_rational(wf.weight_text);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), wf.weight_line, wf.weight_column);
            }
            if (w < 0 || w > 1)
                throw ParseError("weight " + wf.weight_text + " outside [0, 1]",
                                 wf.weight_line, wf.weight_column);
            if (!seen.insert({wf.atom.name, wf.atom.negated}).second)
                throw ParseError("duplicate weighted fact for atom '" +
                                     std::string(wf.atom.negated ? "-" : "") +
                                     wf.atom.name + "'",
                                 wf.atom.line, wf.atom.column);
            if (!annotated_symbols.insert(wf.atom.name).second)
                throw ParseError("weighted facts on both polarities of symbol '" +
                                     wf.atom.name + "'",
                                 wf.atom.line, wf.atom.column);
            SignedAtom atom{static_cast<std::uint32_t>(*p.symbols.find(wf.atom.name)),
                            wf.atom.negated};
            p.weighted_facts.push_back({atom, w});
        }

        for (const auto& pr : rules_) {
            Rule r;
            for (const auto& a : pr.head)
                r.head |= SignedAtom{static_cast<std::uint32_t>(*p.symbols.find(a.name)),
                                     a.negated}
                              .mask();
            for (const auto& l : pr.body) {
                EventMask m = SignedAtom{static_cast<std::uint32_t>(
                                             *p.symbols.find(l.atom.name)),
                                         l.atom.negated}
                                  .mask();
                (l.naf ? r.naf : r.body) |= m;
            }
            p.rules.push_back(r);
        }
        return p;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<PWeightedFact> wfacts_;
    std::vector<PRule> rules_;
};

// (negated, name) tokens in canonical order: positives by name, then
// negations by name.
std::vector<std::pair<bool, std::string>> event_tokens(EventMask event,
                                                       const SymbolTable& symbols) {
    std::vector<std::string> pos, neg;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (event & pos_bit(i)) pos.push_back(symbols.name(i));
        if (event & neg_bit(i)) neg.push_back(symbols.name(i));
    }
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    std::vector<std::pair<bool, std::string>> out;
    for (auto& n : pos) out.emplace_back(false, std::move(n));
    for (auto& n : neg) out.emplace_back(true, std::move(n));
    return out;
}

bool valid_atom_name(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return name != "not";
}

} // namespace

Program parse_program(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

std::string format_weight(const Rational& weight) {
    Integer den = denominator(weight);
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den == 1) return to_decimal_string(weight, std::max(twos, fives));
    return to_fraction_string(weight);
}

std::string format_rule(const Rule& rule, const SymbolTable& symbols) {
    std::ostringstream out;
    auto tokens = event_tokens(rule.head, symbols);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out << " ; ";
        out << (tokens[i].first ? "-" : "") << tokens[i].second;
    }
    if (rule.body != 0 || rule.naf != 0) {
        out << (rule.head ? " :- " : ":- ");
        bool first = true;
        for (const auto& [negated, name] : event_tokens(rule.body, symbols)) {
            if (!first) out << ", ";
            first = false;
            out << (negated ? "-" : "") << name;
        }
        for (const auto& [negated, name] : event_tokens(rule.naf, symbols)) {
            if (!first) out << ", ";
            first = false;
            out << "not " << (negated ? "-" : "") << name;
        }
    }
    out << ".";
    return out.str();
}

std::string format_program(const Program& program) {
    std::ostringstream out;
    for (const auto& wf : program.weighted_facts) {
        out << format_weight(wf.weight) << " :: " << (wf.atom.negated ? "-" : "")
            << program.symbols.name(wf.atom.symbol) << ".\n";
    }
    for (const auto& rule : program.rules) out << format_rule(rule, program.symbols) << "\n";
    return out.str();
}

EventMask parse_event(std::string_view text, SymbolTable& symbols, EventParseMode mode) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    if (tokens.size() == 1 && tokens[0] == "{}") return 0;

    EventMask event = 0;
    for (const auto& tok : tokens) {
        if (tok == "{}")
            throw ParseError("'{}' denotes the empty event and must stand alone");
        std::string_view name = tok;
        bool negated = false;
        if (!name.empty() && name[0] == '-') {
            negated = true;
            name.remove_prefix(1);
        }
        if (!valid_atom_name(name))
            throw ParseError("malformed atom '" + tok + "'");
        std::optional<std::size_t> symbol = symbols.find(name);
        if (!symbol) {
            if (mode == EventParseMode::strict)
                throw ParseError("unknown atom '" + std::string(name) + "'");
            symbol = symbols.intern(std::string(name));
            if (symbols.size() > kMaxUniverseSymbols)
                throw ParseError("event extends the universe past " +
                                 std::to_string(kMaxUniverseSymbols) + " symbols");
        }
        event |= SignedAtom{static_cast<std::uint32_t>(*symbol), negated}.mask();
    }
    return event;
}

std::string format_event(EventMask event, const SymbolTable& symbols) {
    if (event == 0) return "{}";
    std::ostringstream out;
    bool first = true;
    for (const auto& [negated, name] : event_tokens(event, symbols)) {
        if (!first) out << " ";
        first = false;
        out << (negated ? "-" : "") << name;
    }
    return out.str();
}

std::string format_event_compressed(EventMask event, const SymbolTable& symbols) {
    if (event == 0) return "{}";
    std::ostringstream out;
    for (const auto& [negated, name] : event_tokens(event, symbols))
        out << (negated ? "-" : "") << name;
    return out.str();
}

bool event_less(EventMask a, EventMask b, const SymbolTable& symbols) {
    if (a == b) return false;
    std::size_t na = atom_count(a), nb = atom_count(b);
    if (na != nb) return na < nb;
    return event_tokens(a, symbols) < event_tokens(b, symbols);
}

} // namespace wasp
