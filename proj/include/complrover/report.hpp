#pragma once

#include <optional>
#include <sstream>

#include "complrover/serialize.hpp"

namespace complrover {

enum class OutputFormat { Json, Text };

struct OracleSummary {
    std::size_t candidate_count = 0;
    int fresh_constants = 0;
    BoundedAnswers answers;
};

struct EntailmentTarget {
    std::string statement;
    EntailmentEvidence evidence;
};

struct EntailmentReport {
    bool holds = true;  // conjunction over all targets
    std::vector<EntailmentTarget> targets;
};

// The result document a tool run emits on stdout. Sections are filled per
// subcommand; diagnostics collect warnings such as a failed consistency check.
struct ReportDocument {
    std::optional<AnswerSet> solutions;
    std::optional<Classification> classification;
    std::optional<OracleSummary> oracle_summary;
    std::optional<EntailmentReport> entailment;
    std::vector<std::string> diagnostics;
};

inline json to_json(const ReportDocument& report) {
    json out = json::object();
    if (report.solutions) out["solutions"] = to_json(*report.solutions);
    if (report.classification) out["classification"] = to_json(*report.classification);
    if (report.oracle_summary) {
        const OracleSummary& s = *report.oracle_summary;
        json oracle;
        oracle["candidates"] = s.candidate_count;
        oracle["fresh_constants"] = s.fresh_constants;
        oracle["interpretations"] = s.answers.interpretation_count;
        oracle["certain"] = to_json(s.answers.certain);
        oracle["possible"] = to_json(s.answers.possible);
        out["oracle_summary"] = std::move(oracle);
    }
    if (report.entailment) {
        json ent;
        ent["holds"] = report.entailment->holds;
        ent["targets"] = json::array();
        for (const EntailmentTarget& target : report.entailment->targets) {
            json t = to_json(target.evidence);
            t["statement"] = target.statement;
            ent["targets"].push_back(std::move(t));
        }
        out["entailment"] = std::move(ent);
    }
    out["diagnostics"] = report.diagnostics;
    return out;
}

namespace detail {

inline void render_answers_text(std::ostringstream& out, const std::string& title,
                                const AnswerSet& answers) {
    out << title << " (" << answers.solutions.size() << ")";
    if (!answers.domain.empty()) {
        out << " over";
        for (const std::string& v : answers.domain) out << " ?" << v;
    }
    out << "\n";
    for (const SolutionMapping& mu : answers.solutions) {
        out << " ";
        if (mu.empty()) out << " {}";
        for (const auto& [var, value] : mu.bindings()) out << " ?" << var << "=" << to_string(value);
        out << "\n";
    }
}

inline void render_graph_text(std::ostringstream& out, const std::string& title, const Graph& g) {
    out << "  " << title << ":";
    if (g.empty()) out << " (empty)";
    out << "\n";
    for (const Triple& t : g) out << "    " << to_string(t) << "\n";
}

}  // namespace detail

inline std::string to_text(const ReportDocument& report) {
    std::ostringstream out;
    if (report.solutions) detail::render_answers_text(out, "solutions", *report.solutions);
    if (report.classification) {
        const Classification& c = *report.classification;
        out << "classification: " << to_string(c.label) << "\n";
        out << "  certain-answer guarantee:  " << (c.certain_guarantee ? "yes" : "no") << "\n";
        out << "  possible-answer bound:     " << (c.possible_bound_guarantee ? "yes" : "no")
            << "\n";
        for (const EntailmentFact& fact : c.rationale)
            out << "  [" << (fact.holds ? "holds" : "open ") << "] " << fact.role << " "
                << fact.statement << "\n";
    }
    if (report.oracle_summary) {
        const OracleSummary& s = *report.oracle_summary;
        out << "oracle: " << s.answers.interpretation_count << " valid interpretation(s) over "
            << s.candidate_count << " candidate triple(s), " << s.fresh_constants
            << " fresh constant(s)\n";
        detail::render_answers_text(out, "  certain", s.answers.certain);
        detail::render_answers_text(out, "  possible", s.answers.possible);
    }
    if (report.entailment) {
        out << "entailment: " << (report.entailment->holds ? "entailed" : "not entailed") << "\n";
        for (const EntailmentTarget& target : report.entailment->targets) {
            out << (target.evidence.holds ? "  [entailed] " : "  [not entailed] ")
                << target.statement << "\n";
            detail::render_graph_text(out, "prototype", target.evidence.prototype);
            detail::render_graph_text(out, "transferred", target.evidence.transferred);
            detail::render_graph_text(out, "required", target.evidence.required);
        }
    }
    for (const std::string& d : report.diagnostics) out << "diagnostic: " << d << "\n";
    return out.str();
}

inline std::string render(const ReportDocument& report, OutputFormat format) {
    if (format == OutputFormat::Text) return to_text(report);
    return to_json(report).dump(2) + "\n";
}

}  // namespace complrover
