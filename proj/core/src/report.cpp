#include "plurizero/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

namespace plurizero {

using nlohmann::json;

namespace {

void set_if_finite(json& obj, const char* key, double value) {
    if (std::isfinite(value)) obj[key] = value;
}

json config_to_json(const ExperimentConfig& cfg) {
    json c;
    c["experiment"] = cfg.experiment;
    c["seed"] = cfg.seed;
    c["workers"] = cfg.workers;
    json ens;
    ens["kind"] = to_string(cfg.ensemble.kind);
    ens["alpha"] = cfg.ensemble.alpha;
    if (cfg.ensemble.kind == LawKind::heavy_tail_iid) {
        ens["gamma"] = cfg.ensemble.gamma;
        ens["delta"] = cfg.ensemble.delta;
    }
    c["ensemble"] = ens;
    json compact;
    compact["kind"] = to_string(cfg.compact.kind);
    compact["weight"] = cfg.compact.weight;
    compact["boundary_nodes"] = cfg.compact.boundary_nodes;
    c["compact"] = compact;
    c["basis"] = to_string(cfg.basis);
    c["degrees"] = cfg.degrees;
    c["trials"] = cfg.trials;
    json forms = json::array();
    for (const TestFormSpec& spec : cfg.test_forms) {
        json f;
        f["center"] = spec.center;
        f["radius"] = spec.radius;
        f["profile"] = to_string(spec.profile);
        f["amplitude"] = spec.amplitude;
        forms.push_back(f);
    }
    c["test_forms"] = forms;
    if (cfg.experiment == "projective") {
        json proj;
        proj["m"] = cfg.projective_m;
        proj["degrees"] = cfg.projective_degrees;
        proj["trials"] = cfg.projective_trials;
        c["projective"] = proj;
    }
    return c;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report, const ExperimentConfig& cfg) {
    json doc;
    doc["version"] = kVersion;
    doc["experiment"] = report.experiment;
    doc["probes"] = report.probes;
    doc["seed"] = report.seed;
    doc["config"] = config_to_json(cfg);
    doc["audits_pass"] = report.audits_pass;
    doc["resample_events"] = report.resample_events;
    doc["nongeneric_events"] = report.nongeneric_events;
    if (!report.notes.empty()) doc["notes"] = report.notes;

    if (!report.rows.empty()) {
        json rows = json::array();
        for (const PairingStats& r : report.rows) {
            json row;
            row["degree"] = r.degree;
            row["form"] = r.form_index;
            row["mean"] = r.mean;
            row["se"] = r.se;
            set_if_finite(row, "variance", r.variance);
            set_if_finite(row, "variance_se", r.variance_se);
            set_if_finite(row, "variance_n2", r.variance_n2);
            set_if_finite(row, "target", r.target);
            set_if_finite(row, "deviation", r.deviation);
            set_if_finite(row, "exact_target", r.exact_target);
            set_if_finite(row, "c_phi", r.c_phi);
            set_if_finite(row, "audit_ratio", r.audit_ratio);
            set_if_finite(row, "audit_margin", r.audit_margin);
            row["audit_pass"] = r.audit_pass;
            rows.push_back(row);
        }
        doc["rows"] = rows;
        doc["deviations_shrink"] = report.deviations_shrink;
    }
    set_if_finite(doc, "variance_slope", report.variance_slope);
    set_if_finite(doc, "variance_slope_se", report.variance_slope_se);

    if (!report.trajectory.empty()) {
        json rows = json::array();
        for (const TrajectoryRow& r : report.trajectory) {
            json row;
            row["degree"] = r.degree;
            row["form"] = r.form_index;
            row["pairing"] = r.pairing;
            row["target"] = r.target;
            row["deviation"] = r.deviation;
            rows.push_back(row);
        }
        doc["trajectory"] = rows;
        set_if_finite(doc, "last_quartile_sup", report.last_quartile_sup);
        doc["envelope_decreasing"] = report.envelope_decreasing;
    }

    if (!report.bm.empty()) {
        json rows = json::array();
        for (const BMCertificate& r : report.bm) {
            json row;
            row["degree"] = r.degree;
            row["r_n"] = r.r_n;
            row["r_n_nth_root"] = r.r_n_root;
            row["witness_ratio"] = r.witness_ratio;
            row["measure"] = r.measure_id;
            rows.push_back(row);
        }
        doc["bm"] = rows;
    }

    if (report.moment_check) {
        const MomentCheckReport& mc = *report.moment_check;
        json sec;
        sec["alpha"] = mc.alpha;
        sec["dim"] = mc.dim;
        sec["trials"] = mc.trials;
        sec["max_estimate"] = mc.max_estimate;
        sec["max_se"] = mc.max_se;
        sec["certificate"] = mc.certificate;
        sec["pass"] = mc.pass;
        json per = json::array();
        for (const MomentCheckRow& row : mc.per_vector)
            per.push_back({{"estimate", row.estimate}, {"se", row.se}});
        sec["per_vector"] = per;
        doc["moment_check"] = sec;
    }
    set_if_finite(doc, "signed_alpha1", report.signed_alpha1);

    if (report.summability) {
        const SummabilityReport& s = *report.summability;
        json sec;
        sec["alpha"] = s.alpha;
        sec["m"] = s.num_vars;
        sec["fitted_tail_exponent"] = s.fitted_tail_exponent;
        sec["convergent"] = s.convergent;
        sec["partial_sum"] = s.partial_sums.empty() ? 0.0 : s.partial_sums.back();
        sec["terms"] = s.terms.size();
        doc["summability"] = sec;
    }

    if (!report.caps.empty()) {
        json rows = json::array();
        for (const CapRow& r : report.caps) {
            json row;
            row["degree"] = r.degree;
            row["window"] = r.window_index;
            row["mean_mass"] = r.mean_mass;
            row["se"] = r.se;
            row["target"] = r.target;
            row["deviation"] = r.deviation;
            rows.push_back(row);
        }
        doc["windows"] = rows;
    }

    return doc.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string csv_escape_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv_tables(const ExperimentReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path tables = fs::path(dir) / "tables";
    fs::create_directories(tables);

    if (!report.rows.empty()) {
        std::string text =
            "degree,form,mean,se,variance,variance_se,variance_n2,target,deviation,"
            "exact_target,c_phi,audit_ratio,audit_margin,audit_pass\n";
        for (const PairingStats& r : report.rows) {
            text += std::to_string(r.degree) + "," + std::to_string(r.form_index) + "," +
                    csv_escape_double(r.mean) + "," + csv_escape_double(r.se) + "," +
                    csv_escape_double(r.variance) + "," + csv_escape_double(r.variance_se) + "," +
                    csv_escape_double(r.variance_n2) + "," + csv_escape_double(r.target) + "," +
                    csv_escape_double(r.deviation) + "," + csv_escape_double(r.exact_target) +
                    "," + csv_escape_double(r.c_phi) + "," + csv_escape_double(r.audit_ratio) +
                    "," + csv_escape_double(r.audit_margin) + "," +
                    (r.audit_pass ? "1" : "0") + "\n";
        }
        write_file(tables / "rows.csv", text);
    }
    if (!report.trajectory.empty()) {
        std::string text = "degree,form,pairing,target,deviation\n";
        for (const TrajectoryRow& r : report.trajectory) {
            text += std::to_string(r.degree) + "," + std::to_string(r.form_index) + "," +
                    csv_escape_double(r.pairing) + "," + csv_escape_double(r.target) + "," +
                    csv_escape_double(r.deviation) + "\n";
        }
        write_file(tables / "trajectory.csv", text);
    }
    if (!report.bm.empty()) {
        std::string text = "degree,r_n,r_n_nth_root,witness_ratio,measure\n";
        for (const BMCertificate& r : report.bm) {
            text += std::to_string(r.degree) + "," + csv_escape_double(r.r_n) + "," +
                    csv_escape_double(r.r_n_root) + "," + csv_escape_double(r.witness_ratio) +
                    "," + r.measure_id + "\n";
        }
        write_file(tables / "bm.csv", text);
    }
    if (!report.caps.empty()) {
        std::string text = "degree,window,mean_mass,se,target,deviation\n";
        for (const CapRow& r : report.caps) {
            text += std::to_string(r.degree) + "," + std::to_string(r.window_index) + "," +
                    csv_escape_double(r.mean_mass) + "," + csv_escape_double(r.se) + "," +
                    csv_escape_double(r.target) + "," + csv_escape_double(r.deviation) + "\n";
        }
        write_file(tables / "windows.csv", text);
    }
    if (report.summability) {
        std::string text = "n,term,partial_sum\n";
        const SummabilityReport& s = *report.summability;
        for (std::size_t i = 0; i < s.terms.size(); ++i) {
            text += std::to_string(i + 1) + "," + csv_escape_double(s.terms[i]) + "," +
                    csv_escape_double(s.partial_sums[i]) + "\n";
        }
        write_file(tables / "summability.csv", text);
    }
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string manifest_json(const ExperimentConfig& cfg, const std::string& config_path,
                          const std::string& config_text, const std::string& started_iso,
                          const std::string& finished_iso,
                          const std::vector<std::string>& outputs) {
    json doc;
    doc["version"] = kVersion;
    doc["config_path"] = config_path;
    doc["config_hash_fnv1a64"] = fnv1a_hex(config_text);
    doc["seed"] = cfg.seed;
    doc["experiment"] = cfg.experiment;
    doc["started"] = started_iso;
    doc["finished"] = finished_iso;
    doc["outputs"] = outputs;
    return doc.dump(2) + "\n";
}

}  // namespace plurizero
