#pragma once

#include <fstream>
#include <sstream>

#include "complrover/parse.hpp"
#include "complrover/report.hpp"

namespace complrover {

// Enumeration over 2^cap subsets must stay desk-scale.
inline constexpr std::size_t kMaxCandidateCap = 24;

struct WorkspaceConfig {
    std::string graph_path;
    std::optional<std::string> statements_path;
    std::string query_path;
    int fresh_constants = 1;
    std::size_t candidate_cap = kDefaultCandidateCap;
    OutputFormat output_format = OutputFormat::Json;
};

enum class Subcommand { Eval, Classify, Entails, Oracle };

struct RunResult {
    ReportDocument report;
    int exit_code = 0;  // 0 success, 1 input error (thrown), 2 invariant violation
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace detail {

// Prefix parse failures with the offending file; the error category (and the
// exit code) stays the same.
template <typename F>
auto parsing(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.kind, e.line, path + ": " + e.what());
    } catch (const UnsafeQueryError& e) {
        throw UnsafeQueryError(path + ": " + e.what());
    }
}

}  // namespace detail

// Runs one subcommand over the configured inputs and assembles the report.
// Input problems are thrown (the caller maps them to exit code 1); a nonzero
// exit_code in the result signals a detected invariant violation.
inline RunResult run(const WorkspaceConfig& config, Subcommand command,
                     std::optional<std::uint64_t> seed = std::nullopt) {
    if (config.candidate_cap > kMaxCandidateCap)
        throw Error("candidate cap must be at most " + std::to_string(kMaxCandidateCap));
    if (config.fresh_constants < 0) throw Error("fresh constant count must be non-negative");

    RunResult result;
    StatementSet statements;
    if (config.statements_path)
        statements = detail::parsing(*config.statements_path, [&] {
            return parse_statements(read_file(*config.statements_path));
        });

    if (command == Subcommand::Entails) {
        // The query slot holds the target statement(s).
        const StatementSet targets = detail::parsing(
            config.query_path, [&] { return parse_statements(read_file(config.query_path)); });
        EntailmentReport entailment;
        for (const CompletenessStatement& target : targets) {
            EntailmentTarget entry{to_string(target), entailment_evidence(statements, target)};
            entailment.holds = entailment.holds && entry.evidence.holds;
            entailment.targets.push_back(std::move(entry));
        }
        result.report.entailment = std::move(entailment);
        return result;
    }

    const Graph graph = detail::parsing(
        config.graph_path, [&] { return parse_ntriples(read_file(config.graph_path)); });
    const Query query = detail::parsing(
        config.query_path, [&] { return parse_query(read_file(config.query_path)); });

    if (!check_consistency(query))
        result.report.diagnostics.push_back(
            "warning: the query may be inconsistent (its frozen positive part matches a negated "
            "pattern); results and classification assume the stated semantics");

    result.report.solutions = eval_query(query, graph);
    if (command == Subcommand::Eval) return result;

    result.report.classification = classify(query, statements);
    if (command == Subcommand::Classify) return result;

    const Universe universe = make_universe(graph, statements, query, config.fresh_constants);
    OracleSummary summary{universe.candidates.size(), universe.fresh_constants,
                          bounded_answers(query, graph, statements, universe, config.candidate_cap,
                                          seed)};

    // Cross-check the classifier's guarantees against the bounded semantics.
    const AnswerSet& certain = summary.answers.certain;
    const AnswerSet& possible = summary.answers.possible;
    const AnswerSet& solutions = *result.report.solutions;
    auto flag = [&result](const std::string& message) {
        result.report.diagnostics.push_back("discrepancy: " + message);
        result.exit_code = 2;
    };
    auto subset = [](const AnswerSet& a, const AnswerSet& b) {
        for (const SolutionMapping& mu : a.solutions)
            if (!b.contains(mu)) return false;
        return true;
    };
    if (!subset(certain, solutions) || !subset(solutions, possible))
        flag("bounded certain/possible answers do not sandwich the query result");
    if (result.report.classification->certain_guarantee && certain.solutions != solutions.solutions)
        flag("certain-answer guarantee disagrees with the bounded certain answers");
    if (result.report.classification->possible_bound_guarantee &&
        possible.solutions != solutions.solutions)
        flag("possible-answer bound disagrees with the bounded possible answers");

    result.report.oracle_summary = std::move(summary);
    return result;
}

}  // namespace complrover
