#include "roadcarbon/commands.hpp"

#include "roadcarbon/corpus.hpp"
#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <sstream>

namespace roadcarbon::commands {

namespace {

int report_error(const std::exception& e, std::ostream& err)
{
    if (dynamic_cast<const IoError*>(&e) != nullptr) {
        err << fmt::format("error: {}\n", e.what());
        return kExitUsage;
    }
    err << fmt::format("error: {}\n", e.what());
    return kExitDomain;
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(fmt::format("cannot write: {}", path.string()));
    }
    out << content;
}

void print_section(const pavement::PavementSection& section, std::ostream& out)
{
    out << "pavement section\n";
    out << fmt::format("  base_thickness_mm          {}\n",
                       csv::format_sig6(section.base_thickness_mm));
    out << fmt::format("  base_modulus_mpa           {}\n",
                       csv::format_sig6(section.base_modulus_mpa));
    out << fmt::format("  seasonal_subgrade_moduli   {} {} {} {}\n",
                       csv::format_sig6(section.seasonal_subgrade_moduli_mpa[0]),
                       csv::format_sig6(section.seasonal_subgrade_moduli_mpa[1]),
                       csv::format_sig6(section.seasonal_subgrade_moduli_mpa[2]),
                       csv::format_sig6(section.seasonal_subgrade_moduli_mpa[3]));
    out << fmt::format("  total_damage               {}\n",
                       csv::format_sig6(section.total_damage));
    out << fmt::format("  aggregate_loss_allowance   {}\n",
                       csv::format_sig6(section.aggregate_loss_allowance_mm));
}

void write_results_header_and_row(const corpus::ProjectRecord& record,
                                  const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(fmt::format("cannot write: {}", path.string()));
    }
    const corpus::ProjectRecord records[] = {record};
    corpus::write_results_csv(records, out);
}

} // namespace

RunConfig load_run_config(const Options& options)
{
    RunConfig config;
    if (options.config_path) {
        config = RunConfig::from_file(*options.config_path);
    }
    if (options.seed) {
        config.generator.seed = *options.seed;
    }
    if (options.out_dir) {
        config.output_dir = *options.out_dir;
    }
    if (options.factors_path) {
        config.factors_path = *options.factors_path;
    }
    if (options.plan_path) {
        config.plan = plan_from_file(*options.plan_path);
    }
    return config;
}

int cmd_design(const std::filesystem::path& project_file, const Options& options,
               std::ostream& out, std::ostream& err)
{
    try {
        if (!std::filesystem::exists(project_file)) {
            err << fmt::format("error: file not found: {}\n", project_file.string());
            return kExitUsage;
        }
        const auto config = load_run_config(options);
        auto record = corpus::load_project(project_file);
        const auto bundle = corpus::design_project(record, config);

        out << fmt::format("project {}\n", record.project_id);
        print_section(bundle.section, out);
        out << fmt::format("earthworks: cut {} m3, fill {} m3\n",
                           csv::format_sig6(bundle.cut_m3), csv::format_sig6(bundle.fill_m3));
        out << fmt::format("grades: max before {} / after {} (reduction {})\n",
                           csv::format_sig6(bundle.grades.max_grade_before),
                           csv::format_sig6(bundle.grades.max_grade_after),
                           csv::format_sig6(bundle.grades.slope_reduction));
        out << "bill of quantities\n";
        std::ostringstream boq;
        quantities::write_boq_csv(bundle.boq, boq);
        out << boq.str();
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_assess(const std::filesystem::path& project_file, const Options& options,
               std::ostream& out, std::ostream& err)
{
    try {
        if (!std::filesystem::exists(project_file)) {
            err << fmt::format("error: file not found: {}\n", project_file.string());
            return kExitUsage;
        }
        const auto config = load_run_config(options);
        if (config.factors_path.empty()) {
            err << "error: no factor table configured (use --factors or the config file)\n";
            return kExitUsage;
        }
        const auto db = lca::FactorDatabase::from_csv(config.resolve(config.factors_path));

        auto record = corpus::load_project(project_file);
        const auto bundle = corpus::design_project(record, config);
        const auto impact = lca::assess_project(bundle.boq, db, config.references,
                                                config.weights);

        out << fmt::format("project {}\n", record.project_id);
        out << fmt::format("embodied_tco2e  {}\n", csv::format_sig6(impact.embodied_tco2e));
        out << fmt::format("per_km_tco2e    {}\n", csv::format_sig6(impact.per_km_tco2e));
        out << fmt::format("weighted_score  {}\n",
                           csv::format_sig6(impact.weighted_single_score));
        out << "per-material breakdown (kgCO2e)\n";
        for (const auto& item : bundle.boq.items) {
            const auto* factor = db.find(item.material_id, std::string(lca::kGwpCategory));
            const double kg = factor == nullptr ? 0.0 : factor->factor_kgco2e * item.quantity;
            out << fmt::format("  {:<14} {:>12} {:<3} -> {}\n", item.material_id,
                               csv::format_sig6(item.quantity),
                               quantities::to_string(item.unit), csv::format_sig6(kg));
        }

        corpus::DerivedOutputs derived;
        derived.section = bundle.section;
        derived.cut_m3 = bundle.cut_m3;
        derived.fill_m3 = bundle.fill_m3;
        derived.grades = bundle.grades;
        derived.boq = bundle.boq;
        derived.impact = impact;
        record.derived = std::move(derived);

        std::filesystem::create_directories(config.output_dir);
        const auto results_path = config.output_dir / (record.project_id + "_result.csv");
        write_results_header_and_row(record, results_path);
        out << fmt::format("results row written to {}\n", results_path.string());
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_corpus(const Options& options, std::ostream& out, std::ostream& err)
{
    try {
        const auto config = load_run_config(options);
        if (config.factors_path.empty()) {
            err << "error: no factor table configured (use --factors or the config file)\n";
            return kExitUsage;
        }
        const auto db = lca::FactorDatabase::from_csv(config.resolve(config.factors_path));

        std::vector<corpus::ProjectRecord> records;
        records.reserve(config.generator.project_count);
        for (std::size_t i = 0; i < config.generator.project_count; ++i) {
            records.push_back(corpus::run_pipeline(corpus::generate_project(config.generator, i),
                                                   config, db));
        }

        const auto corpus_dir = config.output_dir / "corpus";
        corpus::save_corpus(records, corpus_dir);

        std::ostringstream results;
        corpus::write_results_csv(records, results);
        std::filesystem::create_directories(config.output_dir);
        write_text_file(config.output_dir / "results.csv", results.str());

        std::size_t failures = 0;
        for (const auto& record : records) {
            if (record.failure) {
                ++failures;
                err << fmt::format("warning: {} failed: {}\n", record.project_id,
                                   *record.failure);
            }
        }
        out << fmt::format("generated {} projects ({} failed) under {}\n", records.size(),
                           failures, config.output_dir.string());
        out << fmt::format("results: {}\n", (config.output_dir / "results.csv").string());
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_analyze(const std::filesystem::path& results_csv, const Options& options,
                std::ostream& out, std::ostream& err)
{
    try {
        if (!std::filesystem::exists(results_csv)) {
            err << fmt::format("error: file not found: {}\n", results_csv.string());
            return kExitUsage;
        }
        const auto config = load_run_config(options);
        const auto data = corpus::dataset_from_results_csv(results_csv);
        const auto report = stats::corpus_analysis(data, config.plan);

        std::filesystem::create_directories(config.output_dir);
        write_text_file(config.output_dir / "report.json", report.to_json());
        const auto text = report.to_text();
        write_text_file(config.output_dir / "report.txt", text);
        out << text;
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

} // namespace roadcarbon::commands
