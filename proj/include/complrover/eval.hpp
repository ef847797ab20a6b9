#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "complrover/errors.hpp"
#include "complrover/query.hpp"

namespace complrover {

// Evaluation result: solutions restricted to a fixed variable domain.
struct AnswerSet {
    std::set<std::string> domain;
    std::set<SolutionMapping> solutions;

    bool contains(const SolutionMapping& mu) const { return solutions.count(mu) > 0; }
    std::size_t size() const { return solutions.size(); }
    bool empty() const { return solutions.empty(); }

    friend bool operator==(const AnswerSet&, const AnswerSet&) = default;
};

// Substitutes every variable bound in mu by its ground term; unbound
// variables remain in place.
inline Bgp apply_mapping(const SolutionMapping& mu, const Bgp& p) {
    auto subst = [&mu](const Term& t) -> Term {
        if (t.is_variable())
            if (const Term* bound = mu.find(t.lexical())) return *bound;
        return t;
    };
    Bgp out;
    for (const TriplePattern& tp : p)
        out.insert(TriplePattern(subst(tp.subject()), subst(tp.predicate()), subst(tp.object())));
    return out;
}

namespace detail {

// Substitution can move a literal into subject or predicate position (say a
// positive part binding ?x to a literal that a negative part uses as a
// subject). Such a pattern is not representable and can never match, so the
// checked variant reports it instead of constructing it.
inline std::optional<Bgp> apply_mapping_checked(const SolutionMapping& mu, const Bgp& p) {
    auto subst = [&mu](const Term& t) -> Term {
        if (t.is_variable())
            if (const Term* bound = mu.find(t.lexical())) return *bound;
        return t;
    };
    Bgp out;
    for (const TriplePattern& tp : p) {
        const Term s = subst(tp.subject());
        const Term pr = subst(tp.predicate());
        if (s.is_literal() || pr.is_literal()) return std::nullopt;
        out.insert(TriplePattern(s, pr, subst(tp.object())));
    }
    return out;
}

// Matches one pattern position: constants must coincide, bound variables must
// agree with their binding, free variables get bound.
inline bool bind_or_match(const Term& pattern_term, const Term& data_term, SolutionMapping& mu) {
    if (!pattern_term.is_variable()) return pattern_term == data_term;
    if (const Term* bound = mu.find(pattern_term.lexical())) return *bound == data_term;
    mu.bind(pattern_term.lexical(), data_term);
    return true;
}

inline std::optional<SolutionMapping> match_pattern(const TriplePattern& tp, const Triple& t,
                                                    SolutionMapping mu) {
    if (bind_or_match(tp.subject(), t.subject(), mu) &&
        bind_or_match(tp.predicate(), t.predicate(), mu) &&
        bind_or_match(tp.object(), t.object(), mu))
        return mu;
    return std::nullopt;
}

inline std::size_t bound_positions(const TriplePattern& tp, const SolutionMapping& mu) {
    std::size_t n = 0;
    for (const Term* t : {&tp.subject(), &tp.predicate(), &tp.object()})
        if (!t->is_variable() || mu.binds(t->lexical())) ++n;
    return n;
}

// Pattern-at-a-time backtracking join, most-bound pattern first.
inline void join(std::vector<TriplePattern> pending, const SolutionMapping& mu, const Graph& g,
                 std::set<SolutionMapping>& out) {
    if (pending.empty()) {
        out.insert(mu);
        return;
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i < pending.size(); ++i)
        if (bound_positions(pending[i], mu) > bound_positions(pending[pick], mu)) pick = i;
    const TriplePattern chosen = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    for (const Triple& t : g)
        if (auto extended = match_pattern(chosen, t, mu)) join(pending, *extended, g, out);
}

}  // namespace detail

// All total mappings over var(p) whose instantiation of p is contained in g.
// The empty BGP yields exactly the empty mapping.
inline AnswerSet eval_bgp(const Bgp& p, const Graph& g) {
    AnswerSet result;
    result.domain = p.vars();
    detail::join(std::vector<TriplePattern>(p.begin(), p.end()), SolutionMapping{}, g,
                 result.solutions);
    return result;
}

// mu survives iff each negative BGP, instantiated by mu, has no match in g.
inline AnswerSet eval_pattern(const GraphPattern& p, const Graph& g) {
    AnswerSet result = eval_bgp(p.positive, g);
    if (p.negatives.empty()) return result;
    for (auto it = result.solutions.begin(); it != result.solutions.end();) {
        bool survives = true;
        for (const Bgp& negative : p.negatives) {
            const auto instantiated = detail::apply_mapping_checked(*it, negative);
            if (instantiated && !eval_bgp(*instantiated, g).empty()) {
                survives = false;
                break;
            }
        }
        it = survives ? std::next(it) : result.solutions.erase(it);
    }
    return result;
}

inline AnswerSet eval_query(const Query& q, const Graph& g) {
    if (!validate_safety(q))
        throw UnsafeQueryError("distinguished variables must occur in the positive part");
    AnswerSet result;
    result.domain = q.distinguished;
    for (const SolutionMapping& mu : eval_pattern(q.pattern, g).solutions)
        result.solutions.insert(restrict_to(mu, q.distinguished));
    return result;
}

// CONSTRUCT evaluation: the union over all WHERE solutions of the ground
// instantiations of the template. The precondition makes every result ground.
inline Graph eval_construct(const Bgp& construct_template, const GraphPattern& where,
                            const Graph& g) {
    const std::set<std::string> bound = where.positive.vars();
    for (const std::string& v : construct_template.vars())
        if (!bound.count(v))
            throw IllFormedConstructError("template variable ?" + v +
                                          " does not occur in the WHERE positive part");
    Graph out;
    for (const SolutionMapping& mu : eval_pattern(where, g).solutions)
        for (const TriplePattern& tp : apply_mapping(mu, construct_template)) out.insert(to_triple(tp));
    return out;
}

// Sound consistency test: freeze the positive part and check that no negative
// BGP, instantiated by the identity frozen mapping, matches the frozen graph.
// true guarantees a witness graph (the frozen graph itself); false only means
// this test found no witness.
inline bool check_consistency(const Query& q) {
    const FrozenGraph frozen = freeze(q.pattern.positive);
    const SolutionMapping mu0 = frozen.as_mapping();
    for (const Bgp& negative : q.pattern.negatives)
        if (!eval_bgp(apply_mapping(mu0, negative), frozen.graph).empty()) return false;
    return true;
}

}  // namespace complrover
