#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace complrover {

// Namespaces reserved for constants the library invents (frozen variables and
// the oracle's fresh individuals). Inputs using them are rejected at parse
// time, so invented constants never collide with user terms.
inline constexpr std::string_view kFrozenIriPrefix = "urn:frozen:";
inline constexpr std::string_view kFreshIriPrefix = "urn:fresh:";

// Kind order fixes the canonical term order (kind, lexical) used everywhere
// sorted output is required. There is no blank-node kind.
enum class TermKind { Iri, Literal, Variable };

class Term {
public:
    Term(TermKind kind, std::string lexical) : kind_(kind), lexical_(std::move(lexical)) {
        if (lexical_.empty()) throw std::invalid_argument("term lexical form must be non-empty");
    }

    static Term iri(std::string s) { return Term(TermKind::Iri, std::move(s)); }
    static Term literal(std::string s) { return Term(TermKind::Literal, std::move(s)); }
    static Term variable(std::string name) { return Term(TermKind::Variable, std::move(name)); }

    TermKind kind() const { return kind_; }
    const std::string& lexical() const { return lexical_; }

    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_literal() const { return kind_ == TermKind::Literal; }
    bool is_variable() const { return kind_ == TermKind::Variable; }

    friend auto operator<=>(const Term&, const Term&) = default;

private:
    TermKind kind_;
    std::string lexical_;
};

inline std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// N-Triples-style token: <iri>, "literal", ?variable.
inline std::string to_string(const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri: return "<" + t.lexical() + ">";
        case TermKind::Literal: return "\"" + escape_literal(t.lexical()) + "\"";
        case TermKind::Variable: return "?" + t.lexical();
    }
    return {};
}

// A ground RDF triple: subject and predicate are IRIs, object is an IRI or a literal.
class Triple {
public:
    Triple(Term subject, Term predicate, Term object)
        : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
        if (!subject_.is_iri()) throw std::invalid_argument("triple subject must be an IRI");
        if (!predicate_.is_iri()) throw std::invalid_argument("triple predicate must be an IRI");
        if (object_.is_variable()) throw std::invalid_argument("triple object must be ground");
    }

    const Term& subject() const { return subject_; }
    const Term& predicate() const { return predicate_; }
    const Term& object() const { return object_; }

    friend auto operator<=>(const Triple&, const Triple&) = default;

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

// Full N-Triples line including the terminating dot.
inline std::string to_string(const Triple& t) {
    return to_string(t.subject()) + " " + to_string(t.predicate()) + " " + to_string(t.object()) + " .";
}

// Finite set of ground triples. Set semantics: inserting a duplicate is a no-op.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::set<Triple> triples) : triples_(std::move(triples)) {}
    Graph(std::initializer_list<Triple> triples) : triples_(triples) {}

    bool insert(const Triple& t) { return triples_.insert(t).second; }
    bool contains(const Triple& t) const { return triples_.count(t) > 0; }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const std::set<Triple>& triples() const { return triples_; }
    auto begin() const { return triples_.begin(); }
    auto end() const { return triples_.end(); }

    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    std::set<Triple> triples_;
};

inline Graph graph_union(const Graph& g1, const Graph& g2) {
    Graph out = g1;
    for (const Triple& t : g2) out.insert(t);
    return out;
}

inline bool is_subgraph(const Graph& g1, const Graph& g2) {
    for (const Triple& t : g1)
        if (!g2.contains(t)) return false;
    return true;
}

// Partial mapping from variable names to ground terms.
class SolutionMapping {
public:
    SolutionMapping() = default;

    void bind(const std::string& var, Term value) {
        if (value.is_variable())
            throw std::invalid_argument("solution mappings bind variables to ground terms only");
        bindings_.insert_or_assign(var, std::move(value));
    }

    bool binds(const std::string& var) const { return bindings_.count(var) > 0; }

    // nullptr when the variable is unbound.
    const Term* find(const std::string& var) const {
        auto it = bindings_.find(var);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }
    const std::map<std::string, Term>& bindings() const { return bindings_; }

    std::set<std::string> domain() const {
        std::set<std::string> vars;
        for (const auto& [name, value] : bindings_) vars.insert(name);
        return vars;
    }

    friend auto operator<=>(const SolutionMapping&, const SolutionMapping&) = default;

private:
    std::map<std::string, Term> bindings_;
};

// Projection of a mapping onto a variable set; variables absent from the
// mapping are simply absent from the result.
inline SolutionMapping restrict_to(const SolutionMapping& mu, const std::set<std::string>& vars) {
    SolutionMapping out;
    for (const std::string& v : vars)
        if (const Term* t = mu.find(v)) out.bind(v, *t);
    return out;
}

}  // namespace complrover
