// plurizero: declarative experiment runner for random polynomial zero
// statistics. `plurizero run <config.toml>` executes the configured
// experiment and writes report.json + CSV tables + manifest.json;
// `plurizero validate <config.toml>` checks a config and echoes its
// canonical form.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "plurizero/report.hpp"
#include "plurizero/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"plurizero - numerical experiments on random polynomial zeros"};
    app.set_version_flag("--version", std::string(plurizero::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    plurizero::CliOverrides overrides;

    CLI::App* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", config_path, "path to the .toml config")->required();
    std::uint64_t seed = 0;
    int workers = 0;
    std::string out_dir;
    CLI::Option* seed_opt = run->add_option("--seed", seed, "override the config seed");
    CLI::Option* workers_opt =
        run->add_option("--workers", workers, "worker count (0 = PLURIZERO_WORKERS or hardware)");
    CLI::Option* out_opt = run->add_option("--out", out_dir, "output directory");

    CLI::App* validate = app.add_subcommand("validate", "validate a config and echo it");
    validate->add_option("config", config_path, "path to the .toml config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : plurizero::kExitError;
    }

    if (run->parsed()) {
        if (*seed_opt) overrides.seed = seed;
        if (*workers_opt) overrides.workers = workers;
        if (*out_opt) overrides.out_dir = out_dir;
        return plurizero::run_from_file(config_path, overrides, std::cout, std::cerr);
    }
    return plurizero::validate_from_file(config_path, std::cout, std::cerr);
}
