#pragma once

#include "complrover/eval.hpp"

namespace complrover {

// Compl(P1 | P2): the source contains every instantiation of the pattern P1
// whose extension satisfies the condition P2. An empty condition stands for
// the always-true condition.
class CompletenessStatement {
public:
    explicit CompletenessStatement(Bgp pattern, Bgp condition = Bgp{})
        : pattern_(std::move(pattern)), condition_(std::move(condition)) {
        if (pattern_.empty())
            throw std::invalid_argument("completeness statement pattern must be non-empty");
    }

    const Bgp& pattern() const { return pattern_; }
    const Bgp& condition() const { return condition_; }

    friend auto operator<=>(const CompletenessStatement&, const CompletenessStatement&) = default;

private:
    Bgp pattern_;
    Bgp condition_;
};

inline std::string to_string(const CompletenessStatement& c) {
    return "Compl(" + to_string(c.pattern()) + " | " +
           (c.condition().empty() ? std::string("true") : to_string(c.condition())) + ")";
}

using StatementSet = std::set<CompletenessStatement>;

struct ConstructQuery {
    Bgp head;  // CONSTRUCT template
    GraphPattern where;
};

// The query associated with a statement: CONSTRUCT P1 WHERE (P1 AND P2).
inline ConstructQuery construct_query_of(const CompletenessStatement& c) {
    return ConstructQuery{c.pattern(), GraphPattern{bgp_union(c.pattern(), c.condition()), {}}};
}

// (g, g_prime) satisfies c iff the associated CONSTRUCT query, evaluated over
// the interpretation g_prime, yields only triples already in g.
inline bool satisfies_pair(const Graph& g, const Graph& g_prime, const CompletenessStatement& c) {
    if (!is_subgraph(g, g_prime))
        throw NotAnInterpretationError("lower graph must be a subgraph of the interpretation");
    const ConstructQuery qc = construct_query_of(c);
    return is_subgraph(eval_construct(qc.head, qc.where, g_prime), g);
}

inline bool satisfies_pair_set(const Graph& g, const Graph& g_prime, const StatementSet& cs) {
    if (!is_subgraph(g, g_prime))
        throw NotAnInterpretationError("lower graph must be a subgraph of the interpretation");
    for (const CompletenessStatement& c : cs)
        if (!satisfies_pair(g, g_prime, c)) return false;
    return true;
}

// Transfer operator: the union of all statements' CONSTRUCT results over g.
// Always a subgraph of g, and the minimal lower graph that makes (., g) a
// pair satisfying cs.
inline Graph transfer(const StatementSet& cs, const Graph& g) {
    Graph out;
    for (const CompletenessStatement& c : cs) {
        const ConstructQuery qc = construct_query_of(c);
        out = graph_union(out, eval_construct(qc.head, qc.where, g));
    }
    return out;
}

// Evidence for one entailment decision, kept for explainable output.
struct EntailmentEvidence {
    Graph prototype;    // frozen pattern-and-condition graph of the target
    Graph transferred;  // transfer of the premise set over the prototype
    Graph required;     // the target's CONSTRUCT result over the prototype
    bool holds = false; // required is contained in transferred
};

// Decides cs |= c by the prototypical-pair test: freeze the target's pattern
// and condition into a generic graph P~, take T = transfer(cs, P~), and check
// that the target's CONSTRUCT output over P~ is contained in T. (T, P~) is a
// pair satisfying cs with the smallest possible lower graph, so a failure is
// itself a concrete counterexample pair.
inline EntailmentEvidence entailment_evidence(const StatementSet& cs,
                                              const CompletenessStatement& c) {
    EntailmentEvidence ev;
    ev.prototype = freeze(bgp_union(c.pattern(), c.condition())).graph;
    ev.transferred = transfer(cs, ev.prototype);
    const ConstructQuery qc = construct_query_of(c);
    ev.required = eval_construct(qc.head, qc.where, ev.prototype);
    ev.holds = is_subgraph(ev.required, ev.transferred);
    return ev;
}

inline bool entails(const StatementSet& cs, const CompletenessStatement& c) {
    return entailment_evidence(cs, c).holds;
}

inline bool entails_all(const StatementSet& cs, const StatementSet& targets) {
    for (const CompletenessStatement& c : targets)
        if (!entails(cs, c)) return false;
    return true;
}

}  // namespace complrover
