#ifndef PLURIZERO_CONFIG_HPP
#define PLURIZERO_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "plurizero/experiments.hpp"

namespace plurizero {

struct ConfigError {
    std::string path;  // e.g. "ensemble.gamma"
    std::string message;
};

struct ValidationResult {
    std::optional<ExperimentConfig> config;
    std::vector<ConfigError> errors;

    bool ok() const { return errors.empty() && config.has_value(); }
};

/// Full static validation; errors are aggregated with field paths, never
/// first-error-only.
ValidationResult validate_config(const std::string& toml_text);

/// Canonical config echo; parse(echo(parse(text))) is a fixed point.
std::string config_echo(const ExperimentConfig& cfg);

}  // namespace plurizero

#endif
