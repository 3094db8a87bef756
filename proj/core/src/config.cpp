#include "plurizero/config.hpp"

#include <algorithm>
#include <set>

#include "plurizero/toml.hpp"
#include "plurizero/weight_expr.hpp"

namespace plurizero {

namespace {

using toml::Value;

struct Checker {
    std::vector<ConfigError>& errors;

    void error(const std::string& path, const std::string& message) {
        errors.push_back({path, message});
    }

    const Value* get(const Value& table, const std::string& key) {
        auto it = table.table.find(key);
        return it == table.table.end() ? nullptr : &it->second;
    }

    std::string get_string(const Value& table, const std::string& key, const std::string& path,
                           const std::string& fallback) {
        const Value* v = get(table, key);
        if (!v) return fallback;
        if (v->kind != Value::Kind::string) {
            error(path, "expected a string");
            return fallback;
        }
        return v->str;
    }

    double get_number(const Value& table, const std::string& key, const std::string& path,
                      double fallback) {
        const Value* v = get(table, key);
        if (!v) return fallback;
        if (!v->is_number()) {
            error(path, "expected a number");
            return fallback;
        }
        return v->as_real();
    }

    std::int64_t get_integer(const Value& table, const std::string& key, const std::string& path,
                             std::int64_t fallback) {
        const Value* v = get(table, key);
        if (!v) return fallback;
        if (v->kind != Value::Kind::integer) {
            error(path, "expected an integer");
            return fallback;
        }
        return v->integer;
    }

    std::vector<int> get_int_list(const Value& table, const std::string& key,
                                  const std::string& path) {
        std::vector<int> out;
        const Value* v = get(table, key);
        if (!v) return out;
        if (v->kind != Value::Kind::array) {
            error(path, "expected an array of integers");
            return out;
        }
        for (const Value& item : v->array) {
            if (item.kind != Value::Kind::integer) {
                error(path, "expected integer entries");
                return {};
            }
            out.push_back(static_cast<int>(item.integer));
        }
        return out;
    }

    void check_keys(const Value& table, const std::string& path,
                    const std::set<std::string>& allowed) {
        for (const auto& [key, value] : table.table) {
            if (!allowed.count(key))
                error(path.empty() ? key : path + "." + key, "unknown key");
        }
    }
};

const std::set<std::string> kExperiments = {"expected", "variance", "trajectory",
                                            "bm",       "moment",   "projective"};

}  // namespace

ValidationResult validate_config(const std::string& toml_text) {
    ValidationResult result;
    Value root;
    try {
        root = toml::parse(toml_text);
    } catch (const std::exception& e) {
        result.errors.push_back({"", e.what()});
        return result;
    }
    Checker check{result.errors};
    ExperimentConfig cfg;

    check.check_keys(root, "",
                     {"experiment", "seed", "workers", "out_dir", "ensemble", "compact", "basis",
                      "run", "test_form", "projective"});

    cfg.experiment = check.get_string(root, "experiment", "experiment", "expected");
    if (!kExperiments.count(cfg.experiment))
        check.error("experiment",
                    "unknown experiment '" + cfg.experiment +
                        "' (expected | variance | trajectory | bm | moment | projective)");
    {
        const std::int64_t seed = check.get_integer(root, "seed", "seed", 0);
        if (seed < 0) check.error("seed", "must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(seed);
    }
    cfg.workers = static_cast<int>(check.get_integer(root, "workers", "workers", 0));
    if (cfg.workers < 0) check.error("workers", "must be >= 0 (0 = automatic)");
    cfg.out_dir = check.get_string(root, "out_dir", "out_dir", "");

    // [compact]
    int m = 1;
    if (const Value* compact = check.get(root, "compact")) {
        check.check_keys(*compact, "compact", {"kind", "weight", "boundary_nodes"});
        const std::string kind = check.get_string(*compact, "kind", "compact.kind", "unit_disk");
        if (kind == "unit_disk") cfg.compact.kind = CompactKind::unit_disk;
        else if (kind == "circle") cfg.compact.kind = CompactKind::circle;
        else if (kind == "interval") cfg.compact.kind = CompactKind::interval;
        else if (kind == "polydisk") cfg.compact.kind = CompactKind::polydisk;
        else if (kind == "unit_ball") cfg.compact.kind = CompactKind::unit_ball;
        else check.error("compact.kind", "unknown compact kind '" + kind + "'");
        m = (cfg.compact.kind == CompactKind::polydisk ||
             cfg.compact.kind == CompactKind::unit_ball)
                ? 2
                : 1;
        cfg.compact.weight = check.get_string(*compact, "weight", "compact.weight", "0");
        try {
            Weight::parse(cfg.compact.weight, m);
        } catch (const std::exception& e) {
            check.error("compact.weight", e.what());
        }
        const std::int64_t nodes =
            check.get_integer(*compact, "boundary_nodes", "compact.boundary_nodes", 512);
        if (nodes < 16) check.error("compact.boundary_nodes", "must be >= 16");
        cfg.compact.boundary_nodes = static_cast<std::size_t>(nodes);
    }

    // [ensemble]
    if (const Value* ens = check.get(root, "ensemble")) {
        check.check_keys(*ens, "ensemble", {"kind", "alpha", "gamma", "delta"});
        const std::string kind = check.get_string(*ens, "kind", "ensemble.kind", "gaussian");
        if (kind == "gaussian") cfg.ensemble.kind = LawKind::gaussian;
        else if (kind == "fubini_study") cfg.ensemble.kind = LawKind::fubini_study;
        else if (kind == "heavy_tail_iid") cfg.ensemble.kind = LawKind::heavy_tail_iid;
        else check.error("ensemble.kind", "unknown ensemble kind '" + kind + "'");
        cfg.ensemble.alpha = check.get_number(*ens, "alpha", "ensemble.alpha", 2.0);
        cfg.ensemble.gamma = check.get_number(*ens, "gamma", "ensemble.gamma", 0.0);
        cfg.ensemble.delta = check.get_number(*ens, "delta", "ensemble.delta", 0.0);
        if (cfg.ensemble.alpha < 1.0) check.error("ensemble.alpha", "must be >= 1");
        if (cfg.ensemble.kind == LawKind::heavy_tail_iid) {
            if (!(cfg.ensemble.gamma > 2.0 * m))
                check.error("ensemble.gamma", "gamma must exceed 2m = " + std::to_string(2 * m) +
                                                  " for the heavy-tail law");
            if (cfg.ensemble.alpha >= cfg.ensemble.gamma && cfg.ensemble.gamma > 0.0)
                check.error("ensemble.alpha", "must be < gamma for the heavy-tail law");
            if (cfg.ensemble.delta < 0.0)
                check.error("ensemble.delta", "must be >= 0 (0 = automatic certificate)");
        }
    }

    // [basis]
    if (const Value* basis = check.get(root, "basis")) {
        check.check_keys(*basis, "basis", {"kind"});
        const std::string kind = check.get_string(*basis, "kind", "basis.kind", "monomial");
        if (kind == "monomial") cfg.basis = BasisKind::monomial;
        else if (kind == "chebyshev") cfg.basis = BasisKind::chebyshev;
        else if (kind == "l2_orthonormal") cfg.basis = BasisKind::l2_orthonormal;
        else check.error("basis.kind", "unknown basis kind '" + kind + "'");
        if (cfg.basis == BasisKind::chebyshev && cfg.compact.kind != CompactKind::interval)
            check.error("basis.kind", "chebyshev basis requires compact.kind = interval");
    }

    // [run]
    if (const Value* run = check.get(root, "run")) {
        check.check_keys(*run, "run", {"degrees", "trials"});
        cfg.degrees = check.get_int_list(*run, "degrees", "run.degrees");
        cfg.trials = static_cast<int>(check.get_integer(*run, "trials", "run.trials", 100));
    }

    // [[test_form]]
    if (const Value* forms = check.get(root, "test_form")) {
        if (forms->kind != Value::Kind::array) {
            check.error("test_form", "expected [[test_form]] entries");
        } else {
            cfg.test_forms.clear();
            for (std::size_t i = 0; i < forms->array.size(); ++i) {
                const Value& entry = forms->array[i];
                const std::string path = "test_form[" + std::to_string(i) + "]";
                check.check_keys(entry, path, {"center", "radius", "profile", "amplitude"});
                TestFormSpec spec;
                spec.center.clear();
                if (const Value* center = check.get(entry, "center")) {
                    if (center->kind != Value::Kind::array) {
                        check.error(path + ".center", "expected [re, im] or [[re, im], ...]");
                    } else if (!center->array.empty() &&
                               center->array.front().kind == Value::Kind::array) {
                        for (const Value& coord : center->array) {
                            if (coord.kind != Value::Kind::array || coord.array.size() != 2 ||
                                !coord.array[0].is_number() || !coord.array[1].is_number()) {
                                check.error(path + ".center", "coordinates must be [re, im]");
                                break;
                            }
                            spec.center.push_back(
                                {coord.array[0].as_real(), coord.array[1].as_real()});
                        }
                    } else if (center->array.size() == 2 && center->array[0].is_number() &&
                               center->array[1].is_number()) {
                        spec.center.push_back(
                            {center->array[0].as_real(), center->array[1].as_real()});
                    } else {
                        check.error(path + ".center", "expected [re, im] or [[re, im], ...]");
                    }
                } else {
                    spec.center.assign(static_cast<std::size_t>(m), {0.0, 0.0});
                }
                spec.radius = check.get_number(entry, "radius", path + ".radius", 1.5);
                if (!(spec.radius > 0.0)) check.error(path + ".radius", "must be positive");
                spec.amplitude = check.get_number(entry, "amplitude", path + ".amplitude", 1.0);
                const std::string profile =
                    check.get_string(entry, "profile", path + ".profile", "smooth_bump");
                if (profile == "smooth_bump") spec.profile = BumpProfile::smooth_bump;
                else if (profile == "polynomial_bump") spec.profile = BumpProfile::polynomial_bump;
                else check.error(path + ".profile", "unknown profile '" + profile + "'");
                if (static_cast<int>(spec.center.size()) != m)
                    check.error(path + ".center", "center must have " + std::to_string(m) +
                                                      " coordinate(s) for this compact");
                cfg.test_forms.push_back(std::move(spec));
            }
        }
    }

    // [projective]
    if (const Value* proj = check.get(root, "projective")) {
        check.check_keys(*proj, "projective", {"m", "degrees", "trials"});
        cfg.projective_m = static_cast<int>(check.get_integer(*proj, "m", "projective.m", 1));
        if (cfg.projective_m != 1 && cfg.projective_m != 2)
            check.error("projective.m", "must be 1 or 2");
        cfg.projective_degrees = check.get_int_list(*proj, "degrees", "projective.degrees");
        cfg.projective_trials =
            static_cast<int>(check.get_integer(*proj, "trials", "projective.trials", 0));
    }

    // cross-field rules
    const bool needs_degrees = cfg.experiment != "projective";
    if (needs_degrees) {
        if (cfg.degrees.empty()) check.error("run.degrees", "at least one degree required");
        for (int n : cfg.degrees)
            if (n < 1) check.error("run.degrees", "degrees must be >= 1");
        for (std::size_t i = 1; i < cfg.degrees.size(); ++i) {
            if (cfg.degrees[i] <= cfg.degrees[i - 1]) {
                check.error("run.degrees", "degrees must be strictly increasing");
                break;
            }
        }
    }
    const bool needs_forms = cfg.experiment == "expected" || cfg.experiment == "variance" ||
                             cfg.experiment == "trajectory";
    if (needs_forms && cfg.test_forms.empty())
        check.error("test_form", "at least one test form required for this experiment");
    if (cfg.trials < 1) check.error("run.trials", "must be >= 1");
    if (cfg.experiment == "variance") {
        if (cfg.trials < 2) check.error("run.trials", "variance runs require trials >= 2");
        if (cfg.ensemble.alpha < 2.0)
            check.error("ensemble.alpha",
                        "variance and trajectory runs require the moment exponent alpha >= 2");
    }
    if (cfg.experiment == "trajectory" && cfg.ensemble.alpha < 2.0)
        check.error("ensemble.alpha",
                    "variance and trajectory runs require the moment exponent alpha >= 2");
    if (cfg.experiment == "projective") {
        if (cfg.projective_degrees.empty())
            check.error("projective.degrees", "at least one degree required");
        for (int n : cfg.projective_degrees)
            if (n < 1) check.error("projective.degrees", "degrees must be >= 1");
        if (cfg.projective_trials < 1) check.error("projective.trials", "must be >= 1");
        if (cfg.ensemble.kind == LawKind::heavy_tail_iid && cfg.projective_m == 2 &&
            !(cfg.ensemble.gamma > 4.0))
            check.error("ensemble.gamma", "gamma must exceed 2m = 4 on the surface");
    }

    if (result.errors.empty()) result.config = std::move(cfg);
    return result;
}

std::string config_echo(const ExperimentConfig& cfg) {
    Value root = Value::make_table();
    root.table["experiment"] = Value::make_string(cfg.experiment);
    root.table["seed"] = Value::make_integer(static_cast<std::int64_t>(cfg.seed));
    root.table["workers"] = Value::make_integer(cfg.workers);
    if (!cfg.out_dir.empty()) root.table["out_dir"] = Value::make_string(cfg.out_dir);

    Value ens = Value::make_table();
    ens.table["kind"] = Value::make_string(to_string(cfg.ensemble.kind));
    ens.table["alpha"] = Value::make_real(cfg.ensemble.alpha);
    if (cfg.ensemble.kind == LawKind::heavy_tail_iid) {
        ens.table["gamma"] = Value::make_real(cfg.ensemble.gamma);
        ens.table["delta"] = Value::make_real(cfg.ensemble.delta);
    }
    root.table["ensemble"] = std::move(ens);

    Value compact = Value::make_table();
    compact.table["kind"] = Value::make_string(to_string(cfg.compact.kind));
    compact.table["weight"] = Value::make_string(cfg.compact.weight);
    compact.table["boundary_nodes"] =
        Value::make_integer(static_cast<std::int64_t>(cfg.compact.boundary_nodes));
    root.table["compact"] = std::move(compact);

    Value basis = Value::make_table();
    basis.table["kind"] = Value::make_string(to_string(cfg.basis));
    root.table["basis"] = std::move(basis);

    Value run = Value::make_table();
    std::vector<Value> degrees;
    for (int n : cfg.degrees) degrees.push_back(Value::make_integer(n));
    run.table["degrees"] = Value::make_array(std::move(degrees));
    run.table["trials"] = Value::make_integer(cfg.trials);
    root.table["run"] = std::move(run);

    if (!cfg.test_forms.empty()) {
        std::vector<Value> forms;
        for (const TestFormSpec& spec : cfg.test_forms) {
            Value entry = Value::make_table();
            std::vector<Value> center;
            for (const auto& coord : spec.center) {
                center.push_back(Value::make_array(
                    {Value::make_real(coord[0]), Value::make_real(coord[1])}));
            }
            entry.table["center"] = Value::make_array(std::move(center));
            entry.table["radius"] = Value::make_real(spec.radius);
            entry.table["profile"] = Value::make_string(to_string(spec.profile));
            entry.table["amplitude"] = Value::make_real(spec.amplitude);
            forms.push_back(std::move(entry));
        }
        root.table["test_form"] = Value::make_array(std::move(forms));
    }

    if (cfg.experiment == "projective") {
        Value proj = Value::make_table();
        proj.table["m"] = Value::make_integer(cfg.projective_m);
        std::vector<Value> degrees_p;
        for (int n : cfg.projective_degrees) degrees_p.push_back(Value::make_integer(n));
        proj.table["degrees"] = Value::make_array(std::move(degrees_p));
        proj.table["trials"] = Value::make_integer(cfg.projective_trials);
        root.table["projective"] = std::move(proj);
    }

    return toml::serialize(root);
}

}  // namespace plurizero
