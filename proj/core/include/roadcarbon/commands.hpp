#pragma once

#include "roadcarbon/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace roadcarbon::commands {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // usage and I/O problems
inline constexpr int kExitDomain = 2; // domain errors (infeasible design, missing factors, ...)

/// Shared command-line options; flags override config-file values.
struct Options {
    std::optional<std::filesystem::path> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::filesystem::path> factors_path;
    std::optional<std::filesystem::path> plan_path;
};

/// Config file (or defaults) with flag overrides applied.
RunConfig load_run_config(const Options& options);

/// Design one project: pavement section plus bill of quantities.
int cmd_design(const std::filesystem::path& project_file, const Options& options,
               std::ostream& out, std::ostream& err);

/// Design and assess one project: impact summary, per-material breakdown,
/// and a one-row results CSV in the output directory.
int cmd_assess(const std::filesystem::path& project_file, const Options& options,
               std::ostream& out, std::ostream& err);

/// Generate the configured corpus, run the pipeline over it, and write the
/// project documents plus the results CSV.
int cmd_corpus(const Options& options, std::ostream& out, std::ostream& err);

/// Run the statistical battery over a results CSV; writes report.json and
/// report.txt and prints the text report.
int cmd_analyze(const std::filesystem::path& results_csv, const Options& options,
                std::ostream& out, std::ostream& err);

} // namespace roadcarbon::commands
