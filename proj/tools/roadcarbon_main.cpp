#include "roadcarbon/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common_flags(CLI::App* cmd, roadcarbon::commands::Options& options)
{
    cmd->add_option("--config", options.config_path, "Run configuration JSON file");
    cmd->add_option("--seed", options.seed, "Generator seed (overrides the config)");
    cmd->add_option("--out", options.out_dir, "Output directory");
    cmd->add_option("--factors", options.factors_path, "Emission factor table CSV");
    cmd->add_option("--plan", options.plan_path, "Analysis plan JSON (overrides the config)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Aggregate road design, embodied-carbon assessment and corpus statistics"};
    app.require_subcommand(1);

    roadcarbon::commands::Options options;
    std::filesystem::path project_file;
    std::filesystem::path results_file;

    auto* design = app.add_subcommand("design", "Design the pavement section and quantities "
                                                "for one project document");
    design->add_option("project", project_file, "Project JSON document")->required();
    add_common_flags(design, options);

    auto* assess = app.add_subcommand("assess", "Design a project and convert its quantities "
                                                "to embodied emissions");
    assess->add_option("project", project_file, "Project JSON document")->required();
    add_common_flags(assess, options);

    auto* corpus = app.add_subcommand("corpus", "Generate the configured synthetic corpus and "
                                                "run the full pipeline over it");
    add_common_flags(corpus, options);

    auto* analyze = app.add_subcommand("analyze", "Run the statistical battery over a results "
                                                  "CSV");
    analyze->add_option("results", results_file, "Results CSV produced by corpus/assess")
        ->required();
    add_common_flags(analyze, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : roadcarbon::commands::kExitUsage;
    }

    if (design->parsed()) {
        return roadcarbon::commands::cmd_design(project_file, options, std::cout, std::cerr);
    }
    if (assess->parsed()) {
        return roadcarbon::commands::cmd_assess(project_file, options, std::cout, std::cerr);
    }
    if (corpus->parsed()) {
        return roadcarbon::commands::cmd_corpus(options, std::cout, std::cerr);
    }
    return roadcarbon::commands::cmd_analyze(results_file, options, std::cout, std::cerr);
}
