#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "complrover/classify.hpp"
#include "complrover/oracle.hpp"

namespace complrover {

// ordered_json keeps insertion order, which together with the canonical term
// order makes every serialization byte-stable across runs.
using json = nlohmann::ordered_json;

// Canonical N-Triples: one triple per line in canonical term order.
inline std::string to_ntriples(const Graph& g) {
    std::string out;
    for (const Triple& t : g) {
        out += to_string(t);
        out += '\n';
    }
    return out;
}

inline json to_json(const Graph& g) {
    json lines = json::array();
    for (const Triple& t : g) lines.push_back(to_string(t));
    return lines;
}

inline json to_json(const Term& t) {
    const char* kind = t.is_iri() ? "iri" : (t.is_literal() ? "literal" : "variable");
    return json{{"kind", kind}, {"value", t.lexical()}};
}

inline json to_json(const SolutionMapping& mu) {
    json out = json::object();
    for (const auto& [var, value] : mu.bindings()) out[var] = to_json(value);
    return out;
}

inline json to_json(const AnswerSet& answers) {
    json out;
    out["domain"] = json::array();
    for (const std::string& v : answers.domain) out["domain"].push_back(v);
    out["count"] = answers.solutions.size();
    out["bindings"] = json::array();
    for (const SolutionMapping& mu : answers.solutions) out["bindings"].push_back(to_json(mu));
    return out;
}

inline json to_json(const Classification& c) {
    json out;
    out["certain_guarantee"] = c.certain_guarantee;
    out["possible_bound_guarantee"] = c.possible_bound_guarantee;
    out["label"] = std::string(to_string(c.label));
    out["rationale"] = json::array();
    for (const EntailmentFact& fact : c.rationale)
        out["rationale"].push_back(
            json{{"role", fact.role}, {"statement", fact.statement}, {"holds", fact.holds}});
    return out;
}

inline json to_json(const EntailmentEvidence& ev) {
    json out;
    out["holds"] = ev.holds;
    out["prototype"] = to_json(ev.prototype);
    out["transferred"] = to_json(ev.transferred);
    out["required"] = to_json(ev.required);
    return out;
}

}  // namespace complrover
