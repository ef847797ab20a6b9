#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "complrover/complrover.hpp"

namespace {

using namespace complrover;

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("COMPLROVER_SEED");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') throw Error("COMPLROVER_SEED must be a decimal integer");
    return value;
}

struct CommandSpec {
    CLI::App* app = nullptr;
    Subcommand command = Subcommand::Eval;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "complrover: evaluate a SPARQL fragment with NOT EXISTS over RDF graphs and "
        "classify the guarantees its results carry under completeness statements"};
    app.require_subcommand(1);

    WorkspaceConfig config;
    std::string format = "json";

    auto add_common = [&](CLI::App* sub, bool with_graph, const char* query_help) {
        if (with_graph)
            sub->add_option("--graph", config.graph_path, "N-Triples data file")->required();
        sub->add_option("--query", config.query_path, query_help)->required();
        sub->add_option("--statements", config.statements_path,
                        "completeness statements file (defaults to the empty set)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    std::vector<CommandSpec> specs;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the query and print its solutions");
    add_common(eval_cmd, true, "query file");
    specs.push_back({eval_cmd, Subcommand::Eval});

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "evaluate the query and classify the guarantees of its result");
    add_common(classify_cmd, true, "query file");
    specs.push_back({classify_cmd, Subcommand::Classify});

    CLI::App* entails_cmd = app.add_subcommand(
        "entails", "check whether the statement set entails the target statement(s)");
    add_common(entails_cmd, false, "target statement file");
    specs.push_back({entails_cmd, Subcommand::Entails});

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "classify, then cross-check against brute-force bounded answers");
    add_common(oracle_cmd, true, "query file");
    oracle_cmd
        ->add_option("--fresh-constants", config.fresh_constants,
                     "fresh IRIs added to the candidate pool")
        ->check(CLI::Range(0, 8))
        ->capture_default_str();
    oracle_cmd
        ->add_option("--candidate-cap", config.candidate_cap,
                     "largest candidate pool the oracle will enumerate")
        ->check(CLI::Range(std::size_t{1}, kMaxCandidateCap))
        ->capture_default_str();
    specs.push_back({oracle_cmd, Subcommand::Oracle});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    config.output_format = format == "text" ? OutputFormat::Text : OutputFormat::Json;

    try {
        Subcommand command = Subcommand::Eval;
        for (const CommandSpec& spec : specs)
            if (spec.app->parsed()) command = spec.command;

        const RunResult result = run(config, command, seed_from_env());
        std::cout << render(result.report, config.output_format);
        for (const std::string& diagnostic : result.report.diagnostics)
            std::cerr << diagnostic << "\n";
        return result.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnsafeQueryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UniverseTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
