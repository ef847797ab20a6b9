#include <catch2/catch_amalgamated.hpp>

#include <complrover/classify.hpp>
#include <complrover/oracle.hpp>

#include "support/builders.hpp"
#include "support/gen.hpp"

using namespace complrover;
using builders::iri;
using builders::query;
using builders::tp;
using builders::triple;
using builders::var;

namespace {

const Bgp kOscar{tp(var("x"), iri("won"), iri("oscar"))};
const Bgp kGoldenGlobe{tp(var("x"), iri("won"), iri("gg"))};
const Bgp kTattoo{tp(var("x"), iri("hasTattoo"), var("t"))};
const StatementSet kOscarOnly{CompletenessStatement(kOscar)};

}  // namespace

TEST_CASE("crucial_of examples", "[classify]") {
    SECTION("positive query") {
        const CrucialStatements crucial = crucial_of(query({"x"}, kOscar));
        CHECK(crucial.positive == CompletenessStatement(kOscar));
        CHECK(crucial.negatives.empty());
    }

    SECTION("one negative part") {
        const CrucialStatements crucial = crucial_of(query({"x"}, kOscar, {kTattoo}));
        CHECK(crucial.positive == CompletenessStatement(kOscar));
        CHECK(crucial.negatives == StatementSet{CompletenessStatement(kTattoo, kOscar)});
    }

    SECTION("one negative crucial statement per NOT EXISTS block") {
        const CrucialStatements crucial =
            crucial_of(query({"x"}, kOscar, {kTattoo, kGoldenGlobe}));
        CHECK(crucial.negatives.size() == 2);
    }

    SECTION("unsafe queries are rejected") {
        CHECK_THROWS_AS(crucial_of(query({"q"}, kOscar)), UnsafeQueryError);
    }
}

TEST_CASE("the scenario matrix classifies as in the motivating examples", "[classify]") {
    SECTION("oscar winners: result carries both guarantees") {
        const Classification c = classify(query({"x"}, kOscar), kOscarOnly);
        CHECK(c.certain_guarantee);
        CHECK(c.possible_bound_guarantee);
        CHECK(c.label == Label::CertainAndComplete);
    }

    SECTION("tattooed oscar winners: certain answers only") {
        const Classification c =
            classify(query({"x"}, bgp_union(kOscar, kTattoo)), kOscarOnly);
        CHECK(c.certain_guarantee);
        CHECK_FALSE(c.possible_bound_guarantee);
        CHECK(c.label == Label::CertainLowerBound);
    }

    SECTION("tattooed people without an oscar: certain answers only") {
        const Classification c = classify(query({"x"}, kTattoo, {kOscar}), kOscarOnly);
        CHECK(c.certain_guarantee);
        CHECK_FALSE(c.possible_bound_guarantee);
        CHECK(c.label == Label::CertainLowerBound);
    }

    SECTION("oscar winners without tattoos: possible answers, none certain") {
        const Classification c = classify(query({"x"}, kOscar, {kTattoo}), kOscarOnly);
        CHECK_FALSE(c.certain_guarantee);
        CHECK(c.possible_bound_guarantee);
        CHECK(c.label == Label::PossibleUpperBound);
    }
}

TEST_CASE("complete metadata for both awards upgrades negation to both guarantees", "[classify]") {
    const StatementSet both{CompletenessStatement(kOscar), CompletenessStatement(kGoldenGlobe)};
    const Classification c = classify(query({"x"}, kOscar, {kGoldenGlobe}), both);
    CHECK(c.label == Label::CertainAndComplete);
}

TEST_CASE("no metadata yields no guarantee for queries with negation", "[classify]") {
    const Classification c = classify(query({"x"}, kOscar, {kTattoo}), {});
    CHECK(c.label == Label::NoGuarantee);
    CHECK_FALSE(c.certain_guarantee);
    CHECK_FALSE(c.possible_bound_guarantee);
}

TEST_CASE("rationale lists one entailment fact per crucial statement", "[classify]") {
    const Classification c = classify(query({"x"}, kOscar, {kTattoo, kGoldenGlobe}), kOscarOnly);
    REQUIRE(c.rationale.size() == 3);
    CHECK(c.rationale[0].role == "positive-crucial");
    CHECK(c.rationale[0].holds);
    CHECK(c.rationale[1].role == "negative-crucial");
    CHECK(c.rationale[2].role == "negative-crucial");
}

TEST_CASE("label rendering", "[classify]") {
    CHECK(to_string(Label::CertainAndComplete) == "CERTAIN_AND_COMPLETE");
    CHECK(to_string(Label::CertainLowerBound) == "CERTAIN_LOWER_BOUND");
    CHECK(to_string(Label::PossibleUpperBound) == "POSSIBLE_UPPER_BOUND");
    CHECK(to_string(Label::NoGuarantee) == "NO_GUARANTEE");
}

TEST_CASE("positive queries always carry the certain guarantee", "[classify][property]") {
    testgen::Rng rng(2468);
    const testgen::Alphabet alphabet = testgen::default_alphabet();
    for (int i = 0; i < 80; ++i) {
        const Query q = testgen::random_positive_query(rng, alphabet, 3);
        const StatementSet cs = testgen::random_statements(rng, alphabet, 3);
        CHECK(classify(q, cs).certain_guarantee);
    }
}

TEST_CASE("classification is monotone in the statement set", "[classify][property]") {
    testgen::Rng rng(1357);
    const testgen::Alphabet alphabet = testgen::default_alphabet();
    for (int i = 0; i < 80; ++i) {
        const Query q = testgen::random_query(rng, alphabet, 2, 2, 2);
        const StatementSet smaller = testgen::random_statements(rng, alphabet, 2);
        StatementSet larger = smaller;
        larger.insert(testgen::random_statement(rng, alphabet));
        larger.insert(testgen::random_statement(rng, alphabet));

        const Classification before = classify(q, smaller);
        const Classification after = classify(q, larger);
        if (before.certain_guarantee) CHECK(after.certain_guarantee);
        if (before.possible_bound_guarantee) CHECK(after.possible_bound_guarantee);
    }
}

TEST_CASE("guarantees agree with the bounded oracle on small instances", "[classify][property]") {
    testgen::Rng rng(97531);
    const testgen::Alphabet alphabet = testgen::default_alphabet();
    int certain_checked = 0;
    int possible_checked = 0;
    for (int i = 0; i < 60; ++i) {
        const Graph g = testgen::random_graph(rng, alphabet, 5);
        Query q = testgen::random_query(rng, alphabet, 2, 1, 1);
        StatementSet cs = testgen::random_statements(rng, alphabet, 2);
        if (rng.chance(0.5)) {
            const CrucialStatements crucial = crucial_of(q);
            cs.insert(crucial.positive);
            for (const CompletenessStatement& c : crucial.negatives) cs.insert(c);
        }

        const Classification verdict = classify(q, cs);
        const Universe u = testgen::sampled_universe(rng, g, cs, q, 1, 10);
        const BoundedAnswers bounded = bounded_answers(q, g, cs, u, 10);
        const AnswerSet direct = eval_query(q, g);

        CAPTURE(i);
    REQUIRE(bounded.interpretation_count >= 1);
        if (verdict.certain_guarantee) {
            ++certain_checked;
            CHECK(bounded.certain.solutions == direct.solutions);
        }
        if (verdict.possible_bound_guarantee) {
            ++possible_checked;
            CHECK(bounded.possible.solutions == direct.solutions);
        }
    }
    CHECK(certain_checked > 10);
    CHECK(possible_checked > 10);
}
