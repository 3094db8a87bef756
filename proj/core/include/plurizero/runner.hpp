#ifndef PLURIZERO_RUNNER_HPP
#define PLURIZERO_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "plurizero/config.hpp"
#include "plurizero/experiments.hpp"

namespace plurizero {

/// Exit-code semantics: 0 = all audits pass, 1 = audits failed at their
/// stated tolerances, 2 = infrastructure error (config/IO/module failure).
inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailed = 1;
inline constexpr int kExitError = 2;

struct CliOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> out_dir;
};

/// Dispatch the configured experiment.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const ParallelRunner& pool);

/// Full run: read + validate config, execute, write report.json, tables/,
/// manifest.json. Returns the exit code; messages go to the streams.
int run_from_file(const std::string& config_path, const CliOverrides& overrides,
                  std::ostream& out, std::ostream& err);

/// Validate only; prints either the aggregated error list or the config echo.
int validate_from_file(const std::string& config_path, std::ostream& out, std::ostream& err);

}  // namespace plurizero

#endif
