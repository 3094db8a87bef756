#ifndef PLURIZERO_REPORT_HPP
#define PLURIZERO_REPORT_HPP

#include <string>

#include "plurizero/config.hpp"
#include "plurizero/experiments.hpp"

namespace plurizero {

inline constexpr const char* kVersion = "0.1.0";

/// Machine-readable report (deterministic bytes for a fixed config + seed:
/// no clocks, no addresses, insertion-stable ordering).
std::string report_to_json(const ExperimentReport& report, const ExperimentConfig& cfg);

/// Per-n CSV tables under <dir>/tables/.
void write_csv_tables(const ExperimentReport& report, const std::string& dir);

/// FNV-1a 64-bit, hex; used for config hashes in the manifest.
std::string fnv1a_hex(const std::string& bytes);

/// manifest.json: config path + hash, seed, timestamps, versions, outputs.
/// The manifest carries wall-clock times and is excluded from byte-identity
/// guarantees (report.json and tables are the reproducible artifacts).
std::string manifest_json(const ExperimentConfig& cfg, const std::string& config_path,
                          const std::string& config_text, const std::string& started_iso,
                          const std::string& finished_iso,
                          const std::vector<std::string>& outputs);

std::string iso_timestamp_now();

}  // namespace plurizero

#endif
