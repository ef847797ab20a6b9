#include <catch2/catch_amalgamated.hpp>

#include <complrover/parse.hpp>
#include <complrover/serialize.hpp>

#include "support/builders.hpp"
#include "support/gen.hpp"

using namespace complrover;
using builders::iri;
using builders::tp;
using builders::triple;
using builders::var;

TEST_CASE("parse_ntriples accepts the subset", "[parse]") {
    SECTION("empty input") {
        CHECK(parse_ntriples("").empty());
        CHECK(parse_ntriples("# only a comment\n\n").empty());
    }

    SECTION("IRI and literal objects") {
        const Graph g = parse_ntriples(
            "<urn:a> <urn:won> <urn:oscar> .\n"
            "# a comment line\n"
            "<urn:a> <urn:label> \"Ada \\\"the great\\\"\\n\" .\n");
        CHECK(g.size() == 2);
        CHECK(g.contains(triple(iri("a"), iri("won"), iri("oscar"))));
        CHECK(g.contains(triple(iri("a"), iri("label"), Term::literal("Ada \"the great\"\n"))));
    }

    SECTION("duplicate lines collapse") {
        const Graph g = parse_ntriples(
            "<urn:a> <urn:p> <urn:o> .\n"
            "<urn:a> <urn:p> <urn:o> .\n");
        CHECK(g.size() == 1);
    }
}

TEST_CASE("parse_ntriples rejects malformed input with line numbers", "[parse]") {
    SECTION("blank nodes") {
        try {
            parse_ntriples("<urn:a> <urn:p> <urn:o> .\n_:b <urn:p> <urn:o> .\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseErrorKind::BlankNodeRejected);
            CHECK(e.line == 2);
        }
    }

    SECTION("reserved namespaces") {
        for (const std::string bad :
             {"<urn:frozen:x> <urn:p> <urn:o> .", "<urn:a> <urn:p> <urn:fresh:0> ."}) {
            try {
                parse_ntriples(bad);
                FAIL("expected ParseError");
            } catch (const ParseError& e) {
                CHECK(e.kind == ParseErrorKind::ReservedNamespace);
                CHECK(e.line == 1);
            }
        }
    }

    SECTION("variables are data errors") {
        CHECK_THROWS_AS(parse_ntriples("?x <urn:p> <urn:o> ."), ParseError);
    }

    SECTION("missing dot") {
        try {
            parse_ntriples("<urn:a> <urn:p> <urn:o>\n<urn:a> <urn:p> <urn:q> .");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseErrorKind::Syntax);
            CHECK(e.line == 2);
        }
    }

    SECTION("literal subject") {
        CHECK_THROWS_AS(parse_ntriples("\"a\" <urn:p> <urn:o> ."), ParseError);
    }

    SECTION("relative IRI") {
        CHECK_THROWS_AS(parse_ntriples("<a> <urn:p> <urn:o> ."), ParseError);
    }

    SECTION("unterminated literal") {
        CHECK_THROWS_AS(parse_ntriples("<urn:a> <urn:p> \"oops ."), ParseError);
    }
}

TEST_CASE("parse_query builds the normal form", "[parse]") {
    SECTION("positive query") {
        const Query q = parse_query("SELECT ?x WHERE { ?x <urn:won> <urn:oscar> }");
        CHECK(q.distinguished == std::set<std::string>{"x"});
        CHECK(q.pattern.positive == Bgp{tp(var("x"), iri("won"), iri("oscar"))});
        CHECK(q.is_positive());
    }

    SECTION("query with negation") {
        const Query q = parse_query(
            "SELECT ?x WHERE { ?x <urn:won> <urn:oscar> "
            "FILTER NOT EXISTS { ?x <urn:hasTattoo> ?t } }");
        REQUIRE(q.pattern.negatives.size() == 1);
        CHECK(q.pattern.negatives[0] == Bgp{tp(var("x"), iri("hasTattoo"), var("t"))});
    }

    SECTION("several patterns and negatives") {
        const Query q = parse_query(
            "select ?x ?y where { ?x <urn:won> ?y . ?x <urn:p> <urn:o> "
            "filter not exists { ?x <urn:q> ?t } "
            "filter not exists { ?y <urn:q> <urn:o> . ?x <urn:q> ?y } }");
        CHECK(q.distinguished.size() == 2);
        CHECK(q.pattern.positive.size() == 2);
        CHECK(q.pattern.negatives.size() == 2);
    }

    SECTION("unsafe selection") {
        CHECK_THROWS_AS(parse_query("SELECT ?t WHERE { ?x <urn:won> <urn:oscar> }"),
                        UnsafeQueryError);
    }

    SECTION("empty positive part") {
        CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { }"), ParseError);
        CHECK_THROWS_AS(
            parse_query("SELECT WHERE { FILTER NOT EXISTS { ?x <urn:p> ?y } }"), ParseError);
    }

    SECTION("missing separator dot") {
        CHECK_THROWS_AS(
            parse_query("SELECT ?x WHERE { ?x <urn:p> <urn:o> ?x <urn:q> <urn:o> }"), ParseError);
    }

    SECTION("trailing input") {
        CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { ?x <urn:p> <urn:o> } garbage"), ParseError);
    }
}

TEST_CASE("parse_statements builds statement sets", "[parse]") {
    SECTION("unconditional statement") {
        const StatementSet cs = parse_statements("COMPLETE { ?x <urn:won> <urn:oscar> }");
        REQUIRE(cs.size() == 1);
        CHECK(cs.begin()->pattern() == Bgp{tp(var("x"), iri("won"), iri("oscar"))});
        CHECK(cs.begin()->condition().empty());
    }

    SECTION("conditional statement") {
        const StatementSet cs = parse_statements(
            "COMPLETE { ?x <urn:won> <urn:gg> } WHERE { ?x <urn:won> <urn:oscar> }");
        REQUIRE(cs.size() == 1);
        CHECK(cs.begin()->condition() == Bgp{tp(var("x"), iri("won"), iri("oscar"))});
    }

    SECTION("empty file") {
        CHECK(parse_statements("").empty());
        CHECK(parse_statements("# nothing here\n").empty());
    }

    SECTION("several blocks, duplicates collapse") {
        const StatementSet cs = parse_statements(
            "COMPLETE { ?x <urn:won> <urn:oscar> }\n"
            "COMPLETE { ?x <urn:won> <urn:oscar> }\n"
            "COMPLETE { ?x <urn:hasTattoo> ?t } WHERE { ?x <urn:won> <urn:oscar> }\n");
        CHECK(cs.size() == 2);
    }

    SECTION("empty pattern block") {
        try {
            parse_statements("COMPLETE { }");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseErrorKind::EmptyPattern);
        }
    }
}

TEST_CASE("canonical serialization round-trips", "[parse][property]") {
    testgen::Rng rng(777);
    testgen::Alphabet alphabet = testgen::default_alphabet();
    // literals that exercise the escaping rules
    alphabet.literals.push_back(Term::literal("line\nbreak"));
    alphabet.literals.push_back(Term::literal("quote\" and \\ backslash"));
    alphabet.literals.push_back(Term::literal("tab\tand\rreturn"));
    for (int i = 0; i < 100; ++i) {
        const Graph g = testgen::random_graph(rng, alphabet, 12);
        CHECK(parse_ntriples(to_ntriples(g)) == g);
    }
}

TEST_CASE("serialization is canonical", "[parse]") {
    const Graph g{triple(iri("b"), iri("p"), iri("o")), triple(iri("a"), iri("p"), iri("o"))};
    CHECK(to_ntriples(g) == "<urn:a> <urn:p> <urn:o> .\n<urn:b> <urn:p> <urn:o> .\n");
}
