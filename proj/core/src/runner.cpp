#include "plurizero/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "plurizero/errors.hpp"
#include "plurizero/projective.hpp"
#include "plurizero/report.hpp"

namespace plurizero {

namespace fs = std::filesystem;

ExperimentReport run_experiment(const ExperimentConfig& cfg, const ParallelRunner& pool) {
    if (cfg.experiment == "expected") return expected_distribution_experiment(cfg, pool);
    if (cfg.experiment == "variance") return variance_decay_experiment(cfg, pool);
    if (cfg.experiment == "trajectory") return almost_sure_trajectory(cfg, pool);
    if (cfg.experiment == "bm") return bm_experiment(cfg);
    if (cfg.experiment == "moment") return moment_experiment(cfg);
    if (cfg.experiment == "projective") return global_equidist_experiment(cfg, pool);
    throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void export_projective_clouds(const ExperimentConfig& cfg, const fs::path& tables) {
    // deterministic re-derivation of the first trial's zero cloud per degree
    const CoefficientLaw law = make_law(cfg.ensemble, cfg.projective_m);
    for (const int n : cfg.projective_degrees) {
        const SectionSpace space = make_section_space(cfg.projective_m, n);
        for (int attempt = 0; attempt < 16; ++attempt) {
            const SectionSystem system = sample_section_system(space, law, cfg.seed, 0, attempt);
            try {
                const ProjectiveZeros zeros = zero_locus_cp(system, space);
                {
                    std::ofstream out(tables / ("zeros_n" + std::to_string(n) + "_affine.csv"));
                    zero_sample_to_csv(zeros.affine, out);
                }
                if (cfg.projective_m == 1) {
                    std::ofstream out(tables / ("zeros_n" + std::to_string(n) + "_sphere.csv"));
                    out << "x,y,z,multiplicity\n";
                    out.precision(17);
                    for (std::size_t i = 0; i < zeros.affine.points.size(); ++i) {
                        const auto p = to_sphere(zeros.affine.points[i][0]);
                        out << p[0] << "," << p[1] << "," << p[2] << ","
                            << zeros.affine.multiplicities[i] << "\n";
                    }
                    for (int mult : zeros.infinity_mult)
                        out << "0,0,1," << mult << "\n";
                }
                break;
            } catch (const NonGenericSystemError&) {
                continue;
            }
        }
    }
}

}  // namespace

int run_from_file(const std::string& config_path, const CliOverrides& overrides,
                  std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = read_file(config_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    ValidationResult validation = validate_config(text);
    if (!validation.ok()) {
        err << "config validation failed:\n";
        for (const ConfigError& error : validation.errors)
            err << "  " << (error.path.empty() ? "(document)" : error.path) << ": "
                << error.message << "\n";
        return kExitError;
    }
    ExperimentConfig cfg = *validation.config;
    if (overrides.seed) cfg.seed = *overrides.seed;
    if (overrides.workers) cfg.workers = *overrides.workers;
    if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
    if (cfg.out_dir.empty()) cfg.out_dir = "plurizero_out";

    const std::string started = iso_timestamp_now();
    ExperimentReport report;
    try {
        ParallelRunner pool(cfg.workers);
        report = run_experiment(cfg, pool);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        const fs::path dir(cfg.out_dir);
        fs::create_directories(dir);
        const std::string report_json = report_to_json(report, cfg);
        write_file(dir / "report.json", report_json);
        write_csv_tables(report, cfg.out_dir);
        if (cfg.experiment == "projective")
            export_projective_clouds(cfg, dir / "tables");
        std::vector<std::string> outputs = {"report.json", "tables/"};
        const std::string finished = iso_timestamp_now();
        write_file(dir / "manifest.json",
                   manifest_json(cfg, config_path, text, started, finished, outputs));
    } catch (const std::exception& e) {
        err << "error writing outputs: " << e.what() << "\n";
        return kExitError;
    }

    out << "experiment: " << report.experiment << " (" << report.probes << ")\n";
    out << "report: " << (fs::path(cfg.out_dir) / "report.json").string() << "\n";
    out << "audits: " << (report.audits_pass ? "pass" : "FAIL") << "\n";
    return report.audits_pass ? kExitOk : kExitAuditFailed;
}

int validate_from_file(const std::string& config_path, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = read_file(config_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    const ValidationResult validation = validate_config(text);
    if (!validation.ok()) {
        err << "config validation failed:\n";
        for (const ConfigError& error : validation.errors)
            err << "  " << (error.path.empty() ? "(document)" : error.path) << ": "
                << error.message << "\n";
        return kExitError;
    }
    out << config_echo(*validation.config);
    return kExitOk;
}

}  // namespace plurizero
