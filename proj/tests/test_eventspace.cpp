#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wasp/error.hpp"
#include "wasp/eventspace.hpp"

#include "oracle.hpp"

#include <random>

using namespace wasp;

namespace {

struct Fixture {
    Program p;
    StableModelSet sms;

    explicit Fixture(const std::string& text) : p(parse_program(text)), sms(stable_models(p)) {}

    EventMask ev(const std::string& text) const {
        SymbolTable symbols = p.symbols;
        return parse_event(text, symbols);
    }
};

} // namespace

TEST_CASE("stable cores collect contained and containing models") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n"); // models: -a, ab, ac
    CHECK(stable_core(f.ev("b"), f.sms) == StableCore{1});
    CHECK(stable_core(f.ev("a"), f.sms) == StableCore{1, 2});
    CHECK(stable_core(f.ev("{}"), f.sms) == StableCore{0, 1, 2});
    CHECK(stable_core(f.ev("a b -c"), f.sms) == StableCore{1});
    CHECK(stable_core(f.ev("-a"), f.sms) == StableCore{0});
    CHECK(stable_core(f.ev("-b"), f.sms) == StableCore{});
    CHECK(stable_core(f.ev("a b c"), f.sms) == StableCore{1, 2});
}

TEST_CASE("inconsistent events have no stable core but a class key") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    CHECK_THROWS_AS(stable_core(f.ev("a -a"), f.sms), SemanticError);
    CHECK(class_key(f.ev("a -a"), f.sms) == ClassKey::bottom());
    CHECK(class_key(f.ev("b"), f.sms) == ClassKey{false, {1}});
    CHECK(!is_consistent_event(f.ev("b -b")));
    CHECK(is_consistent_event(f.ev("a b c")));
}

TEST_CASE("events of different sizes can share a class") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    CHECK(class_key(f.ev("a"), f.sms) == class_key(f.ev("a b c"), f.sms));
    CHECK(class_key(f.ev("b"), f.sms) != class_key(f.ev("c"), f.sms));
}

TEST_CASE("class keys order inconsistent first, then core size, then ids") {
    CHECK(class_key_less(ClassKey::bottom(), ClassKey{false, {}}));
    CHECK(class_key_less(ClassKey{false, {}}, ClassKey{false, {0}}));
    CHECK(class_key_less(ClassKey{false, {0}}, ClassKey{false, {1}}));
    CHECK(class_key_less(ClassKey{false, {2}}, ClassKey{false, {0, 1}}));
    CHECK(class_key_less(ClassKey{false, {0, 2}}, ClassKey{false, {1, 2}}));
    CHECK(!class_key_less(ClassKey{false, {1}}, ClassKey{false, {1}}));
}

TEST_CASE("the fruitful program's census") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ClassTable table = enumerate_classes(f.sms, f.p.symbols);
    REQUIRE(table.entries.size() == 9);

    std::vector<std::uint64_t> sizes;
    for (const auto& entry : table.entries) sizes.push_back(entry.size);
    CHECK(sizes == std::vector<std::uint64_t>{37, 9, 9, 3, 3, 0, 0, 2, 1});

    CHECK(table.entries[0].key == ClassKey::bottom());
    CHECK(table.entries[1].key.core == StableCore{});
    CHECK(table.entries[2].key.core == StableCore{0});
    CHECK(table.entries[3].key.core == StableCore{1});
    CHECK(table.entries[4].key.core == StableCore{2});
    CHECK(table.entries[5].key.core == StableCore{0, 1});
    CHECK(table.entries[6].key.core == StableCore{0, 2});
    CHECK(table.entries[7].key.core == StableCore{1, 2});
    CHECK(table.entries[8].key.core == StableCore{0, 1, 2});

    CHECK(table.entries[0].sample == f.ev("a -a"));
    CHECK(table.entries[1].sample == f.ev("-b"));
    CHECK(table.entries[2].sample == f.ev("-a"));
    CHECK(table.entries[3].sample == f.ev("b"));
    CHECK(table.entries[4].sample == f.ev("c"));
    CHECK(table.entries[5].sample == std::nullopt);
    CHECK(table.entries[6].sample == std::nullopt);
    CHECK(table.entries[7].sample == f.ev("a"));
    CHECK(table.entries[8].sample == f.ev("{}"));

    CHECK(table.index_of(ClassKey{false, {1, 2}}) == 7);
    CHECK(table.index_of(ClassKey::bottom()) == 0);
    CHECK(table.find(ClassKey{false, {0, 1}}) == 5);
    CHECK(table.find(ClassKey{false, {0, 3}}) == std::nullopt);
    CHECK_THROWS_AS(table.index_of(ClassKey{false, {0, 3}}), SemanticError);
}

TEST_CASE("a single-fact program splits events three ways") {
    Fixture f("a.\n"); // one model: a
    ClassTable table = enumerate_classes(f.sms, f.p.symbols);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.entries[0].size == 1);  // a -a
    CHECK(table.entries[1].size == 1);  // -a
    CHECK(table.entries[2].size == 2);  // {} and a
    CHECK(table.entries[2].sample == 0);
}

TEST_CASE("the empty program keeps its unrealized empty core") {
    Fixture f("");
    ClassTable table = enumerate_classes(f.sms, f.p.symbols);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.entries[0].size == 0); // no inconsistent events over zero symbols
    CHECK(table.entries[0].sample == std::nullopt);
    CHECK(table.entries[1].size == 0); // the empty core never occurs
    CHECK(table.entries[1].sample == std::nullopt);
    CHECK(table.entries[2].key.core == StableCore{0});
    CHECK(table.entries[2].size == 1);
    CHECK(table.entries[2].sample == 0);
}

TEST_CASE("past twelve models only realized cores are tabulated") {
    // Four independent coins: sixteen stable models, every consistent event
    // realizes its own class.
    Fixture f("0.5 :: a.\n0.5 :: b.\n0.5 :: c.\n0.5 :: d.\n");
    REQUIRE(f.sms.size() == 16);
    ClassTable table = enumerate_classes(f.sms, f.p.symbols);
    CHECK(table.entries.size() == 82); // bottom + 3^4 singleton classes
    for (std::size_t i = 1; i < table.entries.size(); ++i)
        CHECK(table.entries[i].size == 1);
    CHECK(table.entries[0].size == 4 * 4 * 4 * 4 - 81);
}

TEST_CASE("the inconsistent class size follows the closed form") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 50; ++i) {
        Program p = parse_program(oracle::random_program(rng));
        StableModelSet sms;
        try {
            sms = stable_models(p);
        } catch (const SemanticError&) {
            continue;
        }
        ClassTable table = enumerate_classes(sms, p.symbols);

        std::uint64_t brute = 0;
        EventMask universe = p.universe();
        for (EventMask e = 0;; ++e) {
            if (!consistent(e)) ++brute;
            if (e == universe) break;
        }
        CHECK(table.entries[0].size == brute);

        std::uint64_t total = 0;
        for (const auto& entry : table.entries) total += entry.size;
        std::uint64_t expected = 1;
        for (std::size_t s = 0; s < p.symbols.size(); ++s) expected *= 4;
        CHECK(total == expected);
    }
}

TEST_CASE("cores agree with the brute-force oracle") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 100; ++i) {
        Program p = parse_program(oracle::random_program(rng));
        StableModelSet sms;
        oracle::Result brute;
        try {
            sms = stable_models(p);
            brute = oracle::analyze(p);
        } catch (const SemanticError&) {
            continue;
        }
        ClassTable table = enumerate_classes(sms, p.symbols);
        for (const auto& [event, core] : brute.core) {
            CHECK(stable_core(event, sms) == core);
            CHECK(table.entries[table.index_of({false, core})].size ==
                  brute.class_size.at(event));
        }
    }
}

TEST_CASE("the enumeration cap also guards the census") {
    Fixture f("a.\nb.\nc.\n");
    CHECK_THROWS_AS(enumerate_classes(f.sms, f.p.symbols, 2), CapError);
    CHECK(enumerate_classes(f.sms, f.p.symbols, 3).entries.size() == 3);
}
