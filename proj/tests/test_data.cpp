#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wasp/data.hpp"
#include "wasp/error.hpp"

#include <cmath>
#include <sstream>

using namespace wasp;

namespace {

struct Fixture {
    Pipeline pipeline;
    WeightReport report;

    explicit Fixture(const std::string& text)
        : pipeline(analyze(parse_program(text))), report(propagate(pipeline)) {}

    EventMask ev(const std::string& text) const {
        SymbolTable symbols = pipeline.program.symbols;
        return parse_event(text, symbols);
    }

    Dataset data(const std::string& text, EventParseMode mode = EventParseMode::strict,
                 const std::string& source = "data.txt") const {
        std::istringstream in(text);
        return load_dataset(in, pipeline.program.symbols, mode, source);
    }
};

const ThetaVar kAb{1, 0};
const ThetaVar kAc{2, 0};

ThetaAssignment nine_tenths() {
    return {{kAb, Rational(9, 10)}, {kAc, Rational(1, 10)}};
}

} // namespace

TEST_CASE("datasets aggregate lines and skip comments") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    Dataset d = f.data("a b\n# full comment\n\nb a\n{}\n  c  # trailing\n");
    CHECK(d.total == 4);
    CHECK(d.counts.size() == 3);
    CHECK(d.counts.at(f.ev("a b")) == 2);
    CHECK(d.counts.at(0) == 1);
    CHECK(d.counts.at(f.ev("c")) == 1);
    CHECK(d.source == "data.txt");
    CHECK(d.symbols == f.pipeline.program.symbols);
}

TEST_CASE("strict datasets reject unknown atoms with their line number") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    try {
        f.data("a\nq b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string what = e.what();
        CHECK(what.find("data.txt:2:") != std::string::npos);
        CHECK(what.find("unknown atom 'q'") != std::string::npos);
    }
}

TEST_CASE("extending datasets grow their own universe only") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    Dataset d = f.data("a\nq\n", EventParseMode::extend);
    CHECK(d.total == 2);
    CHECK(d.symbols.size() == 4);
    CHECK(f.pipeline.program.symbols.size() == 3);

    ScoreResult score = log_score(f.pipeline, f.report, d, nine_tenths());
    CHECK(score.zero_prob_count == 1); // the out-of-universe observation
    CHECK(score.log_score == doctest::Approx(std::log(3.0 / 46.0)));
}

TEST_CASE("log scores sum observation log-probabilities") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ScoreResult one = log_score(f.pipeline, f.report, f.data("a b\n"), nine_tenths());
    CHECK(one.zero_prob_count == 0);
    CHECK(one.log_score == doctest::Approx(std::log(9.0 / 230.0)));

    ScoreResult mixed =
        log_score(f.pipeline, f.report, f.data("a b\na b\na c\n-a\n"), nine_tenths());
    CHECK(mixed.zero_prob_count == 0);
    CHECK(mixed.log_score ==
          doctest::Approx(2 * std::log(9.0 / 230.0) + std::log(1.0 / 230.0) +
                          std::log(7.0 / 207.0)));

    ScoreResult empty = log_score(f.pipeline, f.report, f.data(""), nine_tenths());
    CHECK(empty.log_score == 0.0);
    CHECK(empty.zero_prob_count == 0);
}

TEST_CASE("ruled-out observations count as misfits instead of minus infinity") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ScoreResult score =
        log_score(f.pipeline, f.report, f.data("-b\n-b\na -a\nb\n"), nine_tenths());
    CHECK(score.zero_prob_count == 3);
    CHECK(score.log_score == doctest::Approx(std::log(9.0 / 230.0)));

    ThetaAssignment edge{{kAb, Rational(0)}, {kAc, Rational(1)}};
    ScoreResult zero_share = log_score(f.pipeline, f.report, f.data("b\nc\n"), edge);
    CHECK(zero_share.zero_prob_count == 1);
    CHECK(zero_share.log_score == doctest::Approx(std::log(1.0 / 23.0)));
}

TEST_CASE("scoring validates the assignment") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    Dataset d = f.data("a\n");
    CHECK_THROWS_AS(log_score(f.pipeline, f.report, d, {}), SemanticError);
    CHECK_THROWS_AS(log_score(f.pipeline, f.report, d, {{kAb, Rational(9, 10)}}),
                    SemanticError);
    ThetaAssignment bad_sum{{kAb, Rational(1, 2)}, {kAc, Rational(1, 3)}};
    CHECK_THROWS_AS(log_score(f.pipeline, f.report, d, bad_sum), SemanticError);
    ThetaAssignment out_of_range{{kAb, Rational(3, 2)}, {kAc, Rational(-1, 2)}};
    CHECK_THROWS_AS(log_score(f.pipeline, f.report, d, out_of_range), SemanticError);
}

TEST_CASE("scoring needs a distribution") {
    Fixture f("a :- not a.\n");
    Dataset d = f.data("{}\n");
    CHECK_THROWS_AS(log_score(f.pipeline, f.report, d, {}), SemanticError);
}

TEST_CASE("fitting recovers an on-grid maximum") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ThetaAssignment fit = fit_theta(f.pipeline, f.report, f.data("a b\n" // 9 of b-side
                                                                 "a b\na b\na b\na b\n"
                                                                 "a b\na b\na b\na b\n"
                                                                 "a c\n"),
                                    10);
    REQUIRE(fit.size() == 2);
    CHECK(fit.at(kAb) == Rational(9, 10));
    CHECK(fit.at(kAc) == Rational(1, 10));

    ThetaAssignment even = fit_theta(f.pipeline, f.report, f.data("a b\na c\n"), 2);
    CHECK(even.at(kAb) == Rational(1, 2));
}

TEST_CASE("fewer ruled-out observations beat a higher log score") {
    // Nine c-side observations pull the grid toward theta = 0, but that
    // assignment rules out the single b-side observation; the misfit count
    // dominates, so the fit stays interior.
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    Dataset d = f.data("a b\na c\na c\na c\na c\na c\na c\na c\na c\na c\n");
    ThetaAssignment fit = fit_theta(f.pipeline, f.report, d, 10);
    CHECK(fit.at(kAb) == Rational(1, 10));

    ScoreResult at_zero = log_score(f.pipeline, f.report, d,
                                    {{kAb, Rational(0)}, {kAc, Rational(1)}});
    ScoreResult at_fit = log_score(f.pipeline, f.report, d, fit);
    CHECK(at_zero.zero_prob_count == 1);
    CHECK(at_fit.zero_prob_count == 0);
    CHECK(at_zero.log_score > at_fit.log_score); // the pure score prefers 0
}

TEST_CASE("ties fall to the lexicographically first grid point") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ThetaAssignment fit = fit_theta(f.pipeline, f.report, f.data(""), 4);
    CHECK(fit.at(kAb) == Rational(0));
    CHECK(fit.at(kAc) == Rational(1));
}

TEST_CASE("fitting walks the product grid over every group") {
    Fixture f("0.5 :: a.\nb ; c :- a.\nb ; c :- -a.\n");
    REQUIRE(f.pipeline.constraints.groups.size() == 2);
    ThetaAssignment fit = fit_theta(f.pipeline, f.report, f.data(""), 2);
    CHECK(fit.size() == 4);
    for (const auto& group : f.pipeline.constraints.groups) {
        CHECK(fit.at(group.front()) == Rational(0));
        CHECK(fit.at(group.back()) == Rational(1));
    }
}

TEST_CASE("programs without shares fit to the empty assignment") {
    Fixture f("0.3 :: a.\nb :- a.\n");
    CHECK(fit_theta(f.pipeline, f.report, f.data("a b\n"), 10).empty());
    CHECK_THROWS_AS(fit_theta(f.pipeline, f.report, f.data("a b\n"), 0), SemanticError);
}

TEST_CASE("sampling is deterministic and complete") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    Dataset first = sample_events(f.pipeline, f.report, nine_tenths(), 500, 99);
    Dataset second = sample_events(f.pipeline, f.report, nine_tenths(), 500, 99);
    CHECK(first.counts == second.counts);
    CHECK(first.total == 500);
    std::uint64_t total = 0;
    for (const auto& [event, count] : first.counts) {
        total += count;
        CHECK(subset(event, f.pipeline.program.universe()));
        CHECK(consistent(event));
    }
    CHECK(total == 500);

    Dataset other = sample_events(f.pipeline, f.report, nine_tenths(), 500, 100);
    CHECK(first.counts != other.counts);

    Dataset none = sample_events(f.pipeline, f.report, nine_tenths(), 0, 1);
    CHECK(none.total == 0);
    CHECK(none.counts.empty());
}

TEST_CASE("samples track the distribution") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    const std::uint64_t n = 10000;
    Dataset sample = sample_events(f.pipeline, f.report, nine_tenths(), n, 4242);

    // Pearson chi-square against the exact per-event probabilities, with the
    // Wilson-Hilferty cut at significance 0.001.
    ThetaNamer namer = theta_namer(f.pipeline);
    double statistic = 0.0;
    int cells = 0;
    EventMask universe = f.pipeline.program.universe();
    for (EventMask e = 0;; ++e) {
        if (consistent(e)) {
            Rational p = prob_event(f.pipeline, f.report, e).eval(nine_tenths(), namer);
            auto it = sample.counts.find(e);
            double observed = it == sample.counts.end() ? 0.0 : static_cast<double>(it->second);
            if (p == 0) {
                CHECK(observed == 0.0);
            } else {
                double expected = to_double(p) * static_cast<double>(n);
                statistic += (observed - expected) * (observed - expected) / expected;
                ++cells;
            }
        }
        if (e == universe) break;
    }
    REQUIRE(cells == 18);
    double df = cells - 1;
    double z = 3.0902; // upper 0.001 normal quantile
    double cut = df * std::pow(1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df)), 3.0);
    CHECK(statistic < cut);
}

TEST_CASE("sampling validates like scoring") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    CHECK_THROWS_AS(sample_events(f.pipeline, f.report, {}, 10, 1), SemanticError);
    Fixture g("a :- not a.\n");
    CHECK_THROWS_AS(sample_events(g.pipeline, g.report, {}, 10, 1), SemanticError);
}

TEST_CASE("share assignments round-trip through JSON") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    std::string text = theta_to_json(f.pipeline, nine_tenths());
    CHECK(text.find("\"theta{ab|a}\": \"9/10\"") != std::string::npos);
    CHECK(text.find("\"theta{ac|a}\": \"1/10\"") != std::string::npos);
    CHECK(parse_theta_json(f.pipeline, text) == nine_tenths());
}

TEST_CASE("JSON share parsing completes the last group variable") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    ThetaAssignment parsed = parse_theta_json(f.pipeline, R"({"theta{ab|a}": "9/10"})");
    CHECK(parsed == nine_tenths());
    ThetaAssignment decimal = parse_theta_json(f.pipeline, R"({"theta{ab|a}": "0.9"})");
    CHECK(decimal == nine_tenths());
    ThetaAssignment integral = parse_theta_json(f.pipeline, R"({"theta{ab|a}": 1})");
    CHECK(integral.at(kAc) == Rational(0));
}

TEST_CASE("JSON share parsing rejects bad input") {
    Fixture f("0.3 :: a.\nb ; c :- a.\n");
    CHECK_THROWS_AS(parse_theta_json(f.pipeline, "{"), ParseError);
    CHECK_THROWS_AS(parse_theta_json(f.pipeline, "[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_theta_json(f.pipeline, R"({"theta{zz|a}": "1/2"})"), SemanticError);
    CHECK_THROWS_AS(parse_theta_json(f.pipeline, R"({"theta{ab|a}": 0.9})"), ParseError);
    CHECK_THROWS_AS(parse_theta_json(f.pipeline, R"({"theta{ab|a}": "3/2"})"), SemanticError);
    CHECK_THROWS_AS(
        parse_theta_json(f.pipeline,
                         R"({"theta{ab|a}": "1/2", "theta{ac|a}": "1/3"})"),
        SemanticError);
}
