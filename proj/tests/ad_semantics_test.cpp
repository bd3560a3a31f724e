#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "semdiff/ad_semantics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace semdiff;
using namespace semdiff::ad;

namespace {

VarDecl bool_input(std::string name) { return {std::move(name), VarKind::Input, true, {"false", "true"}, {}, {}}; }

std::set<Word> words(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

const char* const kLinear = "activity L { action a; action b; start -> a; a -> b; b -> end; }";
const char* const kFork = R"(activity F {
    fork f; join j; action a; action b;
    start -> f; f -> a; f -> b; a -> j; b -> j; j -> end;
})";
const char* const kLoop = R"(activity Loop {
    merge m; action a; decision d;
    start -> m; m -> a; a -> d;
    d -[true]-> m;
    d -[true]-> end;
})";

}  // namespace

TEST_CASE("input_valuations examples") {
    const auto one = input_valuations({bool_input("b")}, {});
    REQUIRE(one.size() == 2);
    CHECK(one[0] == Valuation{{"b", "false"}});
    CHECK(one[1] == Valuation{{"b", "true"}});

    VarDecl status{"status", VarKind::Input, false, {"internal", "external"}, {}, {}};
    const auto four = input_valuations({bool_input("b")}, {bool_input("b"), status});
    REQUIRE(four.size() == 4);
    CHECK(four[0] == Valuation{{"b", "false"}, {"status", "internal"}});
    CHECK(four[1] == Valuation{{"b", "false"}, {"status", "external"}});
    CHECK(four[3] == Valuation{{"b", "true"}, {"status", "external"}});

    VarDecl enum_s{"s", VarKind::Input, false, {"x", "y"}, {}, {}};
    CHECK_THROWS_AS(input_valuations({bool_input("s")}, {enum_s}), SemanticError);

    CHECK(input_valuations(std::vector<VarDecl>{}, std::vector<VarDecl>{}) == std::vector<Valuation>{Valuation{}});
}

TEST_CASE("linear and fork languages") {
    const auto linear = parse_ad(kLinear);
    const auto nfa = build_config_nfa(linear, {});
    CHECK(testing::nfa_member(nfa.nfa, {"a", "b"}));
    CHECK_FALSE(testing::nfa_member(nfa.nfa, {"a"}));
    CHECK_FALSE(testing::nfa_member(nfa.nfa, {"b", "a"}));
    CHECK(words(enumerate_traces(linear, {}, 10)) == std::set<Word>{{"a", "b"}});

    const auto fork = parse_ad(kFork);
    const auto traces = enumerate_traces(fork, {}, 10);
    CHECK(words(traces) == std::set<Word>{{"a", "b"}, {"b", "a"}});
    const auto fnfa = build_config_nfa(fork, {});
    CHECK(testing::nfa_member(fnfa.nfa, {"a", "b"}));
    CHECK(testing::nfa_member(fnfa.nfa, {"b", "a"}));
}

TEST_CASE("three-action linear diagram") {
    const auto d = parse_ad("activity L { action a; action b; action c; start -> a; a -> b; b -> c; c -> end; }");
    const auto ts = enumerate_traces(d, {}, 10);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].size() == 3);
}

TEST_CASE("guard evaluation prunes branches") {
    const auto d = parse_ad(R"(activity G {
        input b : bool;
        decision d; action yes; action no;
        start -> d; d -[b]-> yes; d -[!b]-> no; yes -> end; no -> end;
    })");
    const auto nfa = build_config_nfa(d, {{"b", "false"}});
    for (const auto& row : nfa.nfa.transitions)
        for (const auto& t : row)
            if (t.label != automata::kEpsilon) CHECK(nfa.nfa.alphabet[t.label] != "yes");
    CHECK(words(enumerate_traces(d, {{"b", "false"}}, 5)) == std::set<Word>{{"no"}});
    CHECK(words(enumerate_traces(d, {{"b", "true"}}, 5)) == std::set<Word>{{"yes"}});
    CHECK_THROWS_AS(build_config_nfa(d, {}), SemanticError);
}

TEST_CASE("loop enumeration") {
    const auto d = parse_ad(kLoop);
    const auto ts = enumerate_traces(d, {}, 4);
    CHECK(ts == std::vector<Word>{{"a"}, {"a", "a"}, {"a", "a", "a"}, {"a", "a", "a", "a"}});
}

TEST_CASE("assignments happen after the action and steer later guards") {
    const auto d = parse_ad(R"(activity S {
        local done : bool = false;
        merge m; action work / done := true; decision d;
        start -> m; m -> work; work -> d;
        d -[!done]-> m;
        d -[done]-> end;
    })");
    CHECK(words(enumerate_traces(d, {}, 5)) == std::set<Word>{{"work"}});
}

TEST_CASE("nondeterministic and stuck decisions") {
    const auto d = parse_ad(R"(activity N {
        decision d; action a; action b; action c;
        start -> d; d -[true]-> a; d -[true]-> b; d -[false]-> c;
        a -> end; b -> end; c -> end;
    })");
    CHECK(words(enumerate_traces(d, {}, 3)) == std::set<Word>{{"a"}, {"b"}});

    const auto stuck = parse_ad(R"(activity S {
        decision d; action a; action b;
        start -> d; d -[false]-> a; d -[false]-> b; a -> end; b -> end;
    })");
    CHECK(enumerate_traces(stuck, {}, 3).empty());
}

TEST_CASE("activity final discards other tokens") {
    const auto d = parse_ad(R"(activity K {
        fork f; action a; action b; action c;
        start -> f; f -> a; f -> b; a -> end; b -> c; c -> end;
    })");
    // Interleavings of branch prefixes where at least one branch reached the final node.
    CHECK(words(enumerate_traces(d, {}, 5)) ==
          std::set<Word>{{"a"}, {"a", "b"}, {"b", "a"}, {"b", "c"}, {"a", "b", "c"}, {"b", "a", "c"}, {"b", "c", "a"}});
    const auto cfg = build_config_nfa(d, {});
    std::size_t terminated = 0;
    for (const auto& c : cfg.configurations) terminated += c.terminated ? 1 : 0;
    CHECK(terminated == 1);
}

TEST_CASE("1-safety violations are reported") {
    const auto d = parse_ad(R"(activity U {
        fork f; merge m; action a; action b; action c;
        start -> f; f -> a; f -> b; a -> m; b -> m; m -> c; c -> end;
    })");
    CHECK_THROWS_AS(build_config_nfa(d, {}), SafetyViolation);
    CHECK_THROWS_AS(enumerate_traces(d, {}, 5), SafetyViolation);
}

TEST_CASE("accepts examples") {
    const auto v3 = testing::fixture_ad("adv3.ad");
    const Trace project_first{{{"isInternal", "true"}},
                              {"register", "getWelcomePackage", "assignToProject", "getKeyCard", "addToSystem",
                               "interview", "managerReport", "authorizePayment"}};
    CHECK_FALSE(accepts(v3, project_first));
    const auto v2 = testing::fixture_ad("adv2.ad");
    CHECK(accepts(v2, project_first));
    CHECK_FALSE(accepts(v2, Trace{{{"isInternal", "true"}}, {}}));
    for (const auto& w : enumerate_traces(v3, {{"isInternal", "false"}}, 20))
        CHECK(accepts(v3, Trace{{{"isInternal", "false"}}, w}));
}

TEST_CASE("trace text format") {
    const Trace t{{{"isInternal", "true"}}, {"register", "assignToProject"}};
    const std::string text = print_trace(t);
    CHECK(text ==
          "trace witness {\n  input isInternal = true;\n  1: register;\n  2: assignToProject;\n}\n");
    CHECK(parse_trace(text) == t);
    CHECK(parse_trace("trace t { }") == Trace{});
    CHECK_THROWS_AS(parse_trace("trace t { 2: a; }"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace t { input b = true; input b = false; }"), ParseError);
}

TEST_CASE("enumerated traces agree with the automaton, before and after determinization") {
    testing::Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        const auto d = testing::random_ad(rng);
        for (const auto& v : input_valuations(d, d)) {
            const auto cfg = build_config_nfa(d, v);
            const auto dfa = automata::determinize(cfg.nfa);
            const auto enumerated = words(enumerate_traces(d, v, 6));
            for (const auto& w : testing::all_words(cfg.nfa.alphabet, 6)) {
                const bool in_nfa = testing::nfa_member(cfg.nfa, w);
                CHECK(in_nfa == enumerated.contains(w));
                CHECK(automata::accepts(dfa, w) == in_nfa);
            }
            for (const auto& w : enumerate_traces(d, v, 12)) {
                CHECK(automata::accepts(dfa, w));
                CHECK(accepts(d, Trace{v, w}));
            }
        }
    }
}

TEST_CASE("epsilon moves never change variables") {
    testing::Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto d = testing::random_ad(rng);
        for (const auto& v : input_valuations(d, d)) {
            const auto cfg = build_config_nfa(d, v);
            for (std::size_t s = 0; s < cfg.nfa.size(); ++s)
                for (const auto& t : cfg.nfa.transitions[s])
                    if (t.label == automata::kEpsilon && !cfg.configurations[t.target].terminated)
                        CHECK(cfg.configurations[s].values == cfg.configurations[t.target].values);
        }
    }
}
