#pragma once

#include <string_view>

#include "complrover/completeness.hpp"

namespace complrover {

// The statements whose entailment by the available metadata yields answer
// guarantees: Compl(P+ | true) for the positive part, and Compl(Pi | P+) for
// each NOT EXISTS block Pi.
struct CrucialStatements {
    CompletenessStatement positive;
    StatementSet negatives;
};

inline CrucialStatements crucial_of(const Query& q) {
    if (!validate_safety(q))
        throw UnsafeQueryError("distinguished variables must occur in the positive part");
    CrucialStatements out{CompletenessStatement(q.pattern.positive), {}};
    for (const Bgp& negative : q.pattern.negatives)
        out.negatives.insert(CompletenessStatement(negative, q.pattern.positive));
    return out;
}

enum class Label {
    CertainAndComplete,
    CertainLowerBound,
    PossibleUpperBound,
    NoGuarantee,
};

inline std::string_view to_string(Label label) {
    switch (label) {
        case Label::CertainAndComplete: return "CERTAIN_AND_COMPLETE";
        case Label::CertainLowerBound: return "CERTAIN_LOWER_BOUND";
        case Label::PossibleUpperBound: return "POSSIBLE_UPPER_BOUND";
        case Label::NoGuarantee: return "NO_GUARANTEE";
    }
    return {};
}

struct EntailmentFact {
    std::string role;       // "positive-crucial" or "negative-crucial"
    std::string statement;  // rendered Compl(pattern | condition)
    bool holds = false;

    friend bool operator==(const EntailmentFact&, const EntailmentFact&) = default;
};

// certain_guarantee: the query result equals the certain answers on every
// graph. possible_bound_guarantee: the query result contains every possible
// answer on every graph. Both are sufficient conditions; a false flag asserts
// nothing (absence of proof, not proof of absence).
struct Classification {
    bool certain_guarantee = false;
    bool possible_bound_guarantee = false;
    Label label = Label::NoGuarantee;
    std::vector<EntailmentFact> rationale;
};

inline Label label_of(bool certain, bool possible_bound) {
    if (certain && possible_bound) return Label::CertainAndComplete;
    if (certain) return Label::CertainLowerBound;
    if (possible_bound) return Label::PossibleUpperBound;
    return Label::NoGuarantee;
}

// Certainty needs all negative crucial statements entailed (unconditional for
// positive queries, which have none). The possible-answer bound needs only
// the positive crucial statement: growing the graph can only shrink the
// answers of the negative parts.
inline Classification classify(const Query& q, const StatementSet& cs) {
    const CrucialStatements crucial = crucial_of(q);
    Classification out;

    const bool positive_holds = entails(cs, crucial.positive);
    out.rationale.push_back({"positive-crucial", to_string(crucial.positive), positive_holds});
    out.possible_bound_guarantee = positive_holds;

    bool negatives_hold = true;
    for (const CompletenessStatement& c : crucial.negatives) {
        const bool holds = entails(cs, c);
        out.rationale.push_back({"negative-crucial", to_string(c), holds});
        negatives_hold = negatives_hold && holds;
    }
    out.certain_guarantee = q.is_positive() || negatives_hold;

    out.label = label_of(out.certain_guarantee, out.possible_bound_guarantee);
    return out;
}

}  // namespace complrover
