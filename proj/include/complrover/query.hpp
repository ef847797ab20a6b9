#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "complrover/rdf.hpp"

namespace complrover {

// Triple pattern: like a triple, but any position may hold a variable.
class TriplePattern {
public:
    TriplePattern(Term subject, Term predicate, Term object)
        : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
        if (subject_.is_literal()) throw std::invalid_argument("pattern subject must be an IRI or variable");
        if (predicate_.is_literal()) throw std::invalid_argument("pattern predicate must be an IRI or variable");
    }

    const Term& subject() const { return subject_; }
    const Term& predicate() const { return predicate_; }
    const Term& object() const { return object_; }

    bool is_ground() const {
        return !subject_.is_variable() && !predicate_.is_variable() && !object_.is_variable();
    }

    void collect_vars(std::set<std::string>& out) const {
        for (const Term* t : {&subject_, &predicate_, &object_})
            if (t->is_variable()) out.insert(t->lexical());
    }

    friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

inline std::string to_string(const TriplePattern& p) {
    return to_string(p.subject()) + " " + to_string(p.predicate()) + " " + to_string(p.object());
}

inline Triple to_triple(const TriplePattern& p) {
    if (!p.is_ground()) throw std::logic_error("cannot convert non-ground pattern to triple");
    return Triple(p.subject(), p.predicate(), p.object());
}

// Basic graph pattern: a finite set of triple patterns.
class Bgp {
public:
    Bgp() = default;
    explicit Bgp(std::set<TriplePattern> patterns) : patterns_(std::move(patterns)) {}
    Bgp(std::initializer_list<TriplePattern> patterns) : patterns_(patterns) {}

    bool insert(const TriplePattern& p) { return patterns_.insert(p).second; }

    std::size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }
    const std::set<TriplePattern>& patterns() const { return patterns_; }
    auto begin() const { return patterns_.begin(); }
    auto end() const { return patterns_.end(); }

    std::set<std::string> vars() const {
        std::set<std::string> out;
        for (const TriplePattern& p : patterns_) p.collect_vars(out);
        return out;
    }

    friend auto operator<=>(const Bgp&, const Bgp&) = default;

private:
    std::set<TriplePattern> patterns_;
};

inline std::set<std::string> vars_of(const Bgp& p) { return p.vars(); }

inline Bgp bgp_union(const Bgp& a, const Bgp& b) {
    Bgp out = a;
    for (const TriplePattern& p : b) out.insert(p);
    return out;
}

inline std::string to_string(const Bgp& p) {
    std::string out = "{";
    bool first = true;
    for (const TriplePattern& tp : p) {
        out += first ? " " : " . ";
        out += to_string(tp);
        first = false;
    }
    out += first ? "}" : " }";
    return out;
}

// Normal form of the fragment: one positive BGP plus a sequence of
// NOT EXISTS BGPs. The sequence keeps user-written order for diagnostics;
// semantics does not depend on it.
struct GraphPattern {
    Bgp positive;
    std::vector<Bgp> negatives;

    friend bool operator==(const GraphPattern&, const GraphPattern&) = default;
};

struct Query {
    std::set<std::string> distinguished;
    GraphPattern pattern;

    bool is_positive() const { return pattern.negatives.empty(); }

    friend bool operator==(const Query&, const Query&) = default;
};

// Safety: every distinguished variable occurs in the positive part.
inline bool validate_safety(const Query& q) {
    const std::set<std::string> positive_vars = q.pattern.positive.vars();
    for (const std::string& v : q.distinguished)
        if (!positive_vars.count(v)) return false;
    return true;
}

// Canonical grounding of a BGP: every variable v is replaced by the reserved
// IRI urn:frozen:v. Naming by the variable keeps the map injective without
// any global counter.
struct FrozenGraph {
    Graph graph;
    std::map<std::string, Term> frozen_map;  // variable name -> frozen IRI

    // The identity frozen mapping: each variable bound to its frozen IRI.
    SolutionMapping as_mapping() const {
        SolutionMapping mu;
        for (const auto& [var, iri] : frozen_map) mu.bind(var, iri);
        return mu;
    }
};

inline FrozenGraph freeze(const Bgp& p) {
    FrozenGraph out;
    auto frozen_term = [&out](const Term& t) -> Term {
        if (!t.is_variable()) return t;
        Term iri = Term::iri(std::string(kFrozenIriPrefix) + t.lexical());
        out.frozen_map.emplace(t.lexical(), iri);
        return iri;
    };
    for (const TriplePattern& tp : p)
        out.graph.insert(Triple(frozen_term(tp.subject()), frozen_term(tp.predicate()),
                                frozen_term(tp.object())));
    return out;
}

}  // namespace complrover
