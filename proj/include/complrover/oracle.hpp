#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>

#include "complrover/completeness.hpp"

namespace complrover {

inline Term fresh_iri(int index) {
    return Term::iri(std::string(kFreshIriPrefix) + std::to_string(index));
}

// Finite restriction of "any interpretation of the base graph": only triples
// from the candidate pool may be added.
struct Universe {
    Graph base;
    std::vector<Triple> candidates;  // sorted, deduplicated, disjoint from base
    int fresh_constants = 0;         // synthetic IRIs injected into the pool
};

inline constexpr std::size_t kDefaultCandidateCap = 20;

namespace detail {

// Constants collected from graphs and patterns, both as one flat view and
// split by the position they occur in.
struct TermPool {
    std::set<Term> iris;
    std::set<Term> literals;
    std::set<Term> subject_iris;
    std::set<Term> predicate_iris;

    void add(const Term& t, int position) {
        if (t.is_iri()) {
            iris.insert(t);
            if (position == 0) subject_iris.insert(t);
            if (position == 1) predicate_iris.insert(t);
        } else if (t.is_literal()) {
            literals.insert(t);
        }
    }

    void add(const Triple& t) {
        add(t.subject(), 0);
        add(t.predicate(), 1);
        add(t.object(), 2);
    }

    void add(const Bgp& p) {
        for (const TriplePattern& tp : p) {
            add(tp.subject(), 0);
            add(tp.predicate(), 1);
            add(tp.object(), 2);
        }
    }
};

}  // namespace detail

// Default pool: triples over the constants occurring in the base graph, the
// statement set and the query, plus fresh_constants reserved IRIs, minus the
// base triples. Pool subjects range over subject-position constants and the
// fresh IRIs, pool predicates over predicate-position constants, and pool
// objects over every constant plus the fresh IRIs; this keeps the pool
// proportionate to the input instead of cubic in all constants.
inline Universe make_universe(const Graph& g, const StatementSet& cs, const Query& q,
                              int fresh_constants = 1) {
    detail::TermPool pool;
    for (const Triple& t : g) pool.add(t);
    for (const CompletenessStatement& c : cs) {
        pool.add(c.pattern());
        pool.add(c.condition());
    }
    pool.add(q.pattern.positive);
    for (const Bgp& negative : q.pattern.negatives) pool.add(negative);

    std::set<Term> subjects = pool.subject_iris;
    std::set<Term> objects = pool.iris;
    objects.insert(pool.literals.begin(), pool.literals.end());
    for (int i = 0; i < fresh_constants; ++i) {
        subjects.insert(fresh_iri(i));
        objects.insert(fresh_iri(i));
    }

    std::vector<Triple> candidates;
    for (const Term& s : subjects)
        for (const Term& p : pool.predicate_iris)
            for (const Term& o : objects) {
                Triple t(s, p, o);
                if (!g.contains(t)) candidates.push_back(t);
            }
    std::sort(candidates.begin(), candidates.end());
    return Universe{g, std::move(candidates), fresh_constants};
}

namespace detail {

// Candidate list with base triples and duplicates removed; enumeration must
// visit each superset exactly once.
inline std::vector<Triple> normalized_candidates(const Universe& u, std::size_t cap) {
    std::set<Triple> unique;
    for (const Triple& t : u.candidates)
        if (!u.base.contains(t)) unique.insert(t);
    if (unique.size() > cap)
        throw UniverseTooLargeError("candidate pool of " + std::to_string(unique.size()) +
                                    " exceeds the cap of " + std::to_string(cap));
    return std::vector<Triple>(unique.begin(), unique.end());
}

inline Graph superset_for_mask(const Graph& base, const std::vector<Triple>& candidates,
                               std::uint64_t mask) {
    Graph g = base;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) g.insert(candidates[i]);
    return g;
}

}  // namespace detail

// Every superset of g within the universe that, paired with g, satisfies cs.
// g itself is always included (satisfaction is reflexive). Enumeration is a
// binary counter over the candidate pool, so the sequence is deterministic.
inline std::vector<Graph> valid_interpretations(const Graph& g, const StatementSet& cs,
                                                const Universe& u,
                                                std::size_t cap = kDefaultCandidateCap) {
    if (u.base != g) throw std::invalid_argument("universe base must equal the queried graph");
    const std::vector<Triple> candidates = detail::normalized_candidates(u, cap);
    std::vector<Graph> out;
    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Graph interpretation = detail::superset_for_mask(g, candidates, mask);
        if (satisfies_pair_set(g, interpretation, cs)) out.push_back(std::move(interpretation));
    }
    return out;
}

struct BoundedAnswers {
    AnswerSet certain;
    AnswerSet possible;
    std::size_t interpretation_count = 0;
};

// Intersection and union of the query answers over all valid interpretations
// in the universe. The optional seed shuffles only the enumeration order; the
// aggregates are order-independent by construction.
inline BoundedAnswers bounded_answers(const Query& q, const Graph& g, const StatementSet& cs,
                                      const Universe& u, std::size_t cap = kDefaultCandidateCap,
                                      std::optional<std::uint64_t> seed = std::nullopt) {
    if (u.base != g) throw std::invalid_argument("universe base must equal the queried graph");
    if (!validate_safety(q))
        throw UnsafeQueryError("distinguished variables must occur in the positive part");
    const std::vector<Triple> candidates = detail::normalized_candidates(u, cap);

    std::vector<std::uint64_t> order(std::uint64_t{1} << candidates.size());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    if (seed) std::shuffle(order.begin(), order.end(), std::mt19937_64(*seed));

    BoundedAnswers out;
    out.certain.domain = q.distinguished;
    out.possible.domain = q.distinguished;
    bool first = true;
    for (std::uint64_t mask : order) {
        const Graph interpretation = detail::superset_for_mask(g, candidates, mask);
        if (!satisfies_pair_set(g, interpretation, cs)) continue;
        ++out.interpretation_count;
        const AnswerSet answers = eval_query(q, interpretation);
        out.possible.solutions.insert(answers.solutions.begin(), answers.solutions.end());
        if (first) {
            out.certain.solutions = answers.solutions;
            first = false;
        } else {
            for (auto it = out.certain.solutions.begin(); it != out.certain.solutions.end();)
                it = answers.contains(*it) ? std::next(it) : out.certain.solutions.erase(it);
        }
    }
    return out;
}

struct SearchBudget {
    int fresh_constants = 2;
    std::uint64_t max_assignments = 2'000'000;  // enumeration safety stop
};

namespace detail {

// Variables that occur in subject or predicate position may only be mapped
// to IRIs; object-only variables may take literals as well.
inline std::set<std::string> subject_predicate_vars(const Bgp& p) {
    std::set<std::string> out;
    for (const TriplePattern& tp : p) {
        if (tp.subject().is_variable()) out.insert(tp.subject().lexical());
        if (tp.predicate().is_variable()) out.insert(tp.predicate().lexical());
    }
    return out;
}

}  // namespace detail

// Bounded counterexample search for cs |= c: a pair (G, G') with
// satisfies_pair_set(G, G', cs) true but satisfies_pair(G, G', c) false,
// built over the constants of cs and c plus fresh constants from the budget.
//
// A violating pair can always be shrunk to G' = mu(pattern-and-condition) for
// a single mapping mu, with G the transfer of cs over G' (the minimal lower
// graph valid for cs), so enumerating mappings is exhaustive within the term
// universe. Fresh constants are tried first, which makes the first hit the
// most generic pair the search can express.
inline std::optional<std::pair<Graph, Graph>> find_entailment_counterexample(
    const StatementSet& cs, const CompletenessStatement& c, const SearchBudget& budget = {}) {
    const Bgp combined = bgp_union(c.pattern(), c.condition());

    detail::TermPool constants;
    for (const CompletenessStatement& s : cs) {
        constants.add(s.pattern());
        constants.add(s.condition());
    }
    constants.add(combined);

    std::vector<Term> iri_choices;
    for (int i = 0; i < budget.fresh_constants; ++i) iri_choices.push_back(fresh_iri(i));
    iri_choices.insert(iri_choices.end(), constants.iris.begin(), constants.iris.end());
    std::vector<Term> object_choices = iri_choices;
    object_choices.insert(object_choices.end(), constants.literals.begin(),
                          constants.literals.end());

    const std::set<std::string> io_vars = detail::subject_predicate_vars(combined);
    const std::set<std::string> var_set = combined.vars();
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::vector<const std::vector<Term>*> choices;
    for (const std::string& v : vars) {
        const std::vector<Term>* pool = io_vars.count(v) ? &iri_choices : &object_choices;
        if (pool->empty()) return std::nullopt;  // no assignment can exist
        choices.push_back(pool);
    }

    std::vector<std::size_t> pick(vars.size(), 0);
    std::uint64_t tried = 0;
    while (tried < budget.max_assignments) {
        ++tried;
        SolutionMapping mu;
        for (std::size_t i = 0; i < vars.size(); ++i) mu.bind(vars[i], (*choices[i])[pick[i]]);

        Graph upper;
        for (const TriplePattern& tp : apply_mapping(mu, combined)) upper.insert(to_triple(tp));
        const Graph lower = transfer(cs, upper);
        if (satisfies_pair_set(lower, upper, cs) && !satisfies_pair(lower, upper, c))
            return std::make_pair(lower, upper);

        // odometer step over the assignment space
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i]->size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return std::nullopt;
}

}  // namespace complrover
