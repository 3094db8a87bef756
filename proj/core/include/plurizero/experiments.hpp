#ifndef PLURIZERO_EXPERIMENTS_HPP
#define PLURIZERO_EXPERIMENTS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "plurizero/basis.hpp"
#include "plurizero/compact.hpp"
#include "plurizero/ensembles.hpp"
#include "plurizero/parallel.hpp"
#include "plurizero/test_form.hpp"
#include "plurizero/zero_engine.hpp"

namespace plurizero {

enum class BasisKind { monomial, chebyshev, l2_orthonormal };

std::string to_string(BasisKind kind);

struct EnsembleSpec {
    LawKind kind = LawKind::gaussian;
    double alpha = 2.0;
    double gamma = 0.0;  // heavy tail
    double delta = 0.0;  // heavy tail; 0 = auto certificate
};

struct CompactSpec {
    CompactKind kind = CompactKind::unit_disk;
    std::string weight = "0";
    std::size_t boundary_nodes = 512;
};

struct TestFormSpec {
    std::vector<std::vector<double>> center = {{0.0, 0.0}};  // [re, im] per coordinate
    double radius = 1.5;
    BumpProfile profile = BumpProfile::smooth_bump;
    double amplitude = 1.0;
};

struct ExperimentConfig {
    std::string experiment = "expected";  // expected|variance|trajectory|bm|moment|projective
    std::uint64_t seed = 0;
    int workers = 0;
    std::string out_dir;
    EnsembleSpec ensemble;
    CompactSpec compact;
    BasisKind basis = BasisKind::monomial;
    std::vector<int> degrees;
    int trials = 100;
    std::vector<TestFormSpec> test_forms;
    // projective runs
    int projective_m = 1;
    std::vector<int> projective_degrees;
    int projective_trials = 0;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Per-(degree, test form) Monte Carlo statistics.
struct PairingStats {
    int degree = 0;
    int form_index = 0;
    double mean = 0.0;
    double se = 0.0;
    double variance = kNaN;
    double variance_se = kNaN;  // jackknife
    double variance_n2 = kNaN;
    double target = kNaN;       // equilibrium pairing <dd^c V, phi>
    double deviation = kNaN;    // mean - target
    double exact_target = kNaN; // (1/2n) int log Gamma_n dd^c phi (finite-n expectation)
    double c_phi = kNaN;
    double audit_ratio = kNaN;  // Var n^2 / (c_phi^2 D_n^{2/alpha})
    double audit_margin = kNaN; // 3 SE margin on the ratio
    bool audit_pass = true;
};

struct TrajectoryRow {
    int degree = 0;
    int form_index = 0;
    double pairing = 0.0;
    double target = 0.0;
    double deviation = 0.0;
};

/// Sharp sup-vs-L2 constant at degree n with its sharpness witness.
struct BMCertificate {
    int degree = 0;
    double r_n = 0.0;
    double r_n_root = 0.0;       // R_n^{1/n}
    double witness_ratio = 0.0;  // ratio achieved by the extremal kernel section
    std::string measure_id;
};

struct CapRow {
    int degree = 0;
    int window_index = 0;
    double mean_mass = 0.0;
    double se = 0.0;
    double target = 0.0;
    double deviation = 0.0;
};

struct ExperimentReport {
    std::string experiment;
    std::string probes;  // which limit statement the run exercises
    std::uint64_t seed = 0;
    std::vector<PairingStats> rows;
    std::vector<TrajectoryRow> trajectory;
    double variance_slope = kNaN;
    double variance_slope_se = kNaN;
    bool deviations_shrink = true;  // monotone trend of |deviation| over degrees
    double last_quartile_sup = kNaN;
    bool envelope_decreasing = true;
    std::vector<BMCertificate> bm;
    std::optional<MomentCheckReport> moment_check;
    std::optional<SummabilityReport> summability;
    double signed_alpha1 = kNaN;    // moment runs: signed radial integral
    std::vector<CapRow> caps;       // projective runs
    long resample_events = 0;
    long nongeneric_events = 0;
    std::vector<std::string> notes;
    bool audits_pass = true;
};

/// Basis construction used by the drivers: monomial, Chebyshev (interval), or
/// L2-orthonormal w.r.t. the compact's degree-n quadrature.
BasisFamily make_basis(BasisKind kind, const WeightedCompact& kq, int degree);

WeightedCompact make_compact(const CompactSpec& spec);
CoefficientLaw make_law(const EnsembleSpec& spec, int num_vars);
TestForm make_test_form(const TestFormSpec& spec);

/// One coefficient draw expanded to dense monomial coefficients (m = 1).
struct SampledPoly {
    CoefficientVector coeffs;
    std::vector<Complex> dense;
    int attempts = 1;
};

/// MC mean of <[Z-hat], phi> per degree against the equilibrium target, with
/// a monotone shrink check across degrees.
ExperimentReport expected_distribution_experiment(const ExperimentConfig& cfg,
                                                  const ParallelRunner& pool);

/// MC mean against the deterministic finite-n expectation
/// (1/2n) int log Gamma_n dd^c phi at each configured degree (gaussian / FS).
ExperimentReport exact_expectation_check(const ExperimentConfig& cfg, const ParallelRunner& pool);

/// Sample variance per degree, log-log slope fit, and the bound audit
/// Var n^2 <= c_phi^2 D_n^{2/alpha}.
ExperimentReport variance_decay_experiment(const ExperimentConfig& cfg,
                                           const ParallelRunner& pool);

/// One common-seed sample path: a single trial at every degree in
/// [min(degrees), max(degrees)], with last-quartile sup deviation.
ExperimentReport almost_sure_trajectory(const ExperimentConfig& cfg, const ParallelRunner& pool);

/// Bernstein-Markov constant: R_n = sup over the K grid of the square root of
/// the weighted kernel diagonal of the L2(e^{-2nq} sigma_n)-orthonormal family.
BMCertificate bm_constant(const WeightedCompact& kq, const QuadratureRule& sigma, int degree,
                          const std::string& measure_id);

ExperimentReport bm_experiment(const ExperimentConfig& cfg);

/// Moment certificate + empirical check + summability audit for the ensemble.
ExperimentReport moment_experiment(const ExperimentConfig& cfg);

}  // namespace plurizero

#endif
