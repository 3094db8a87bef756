#include "plurizero/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plurizero/errors.hpp"
#include "plurizero/extremal.hpp"
#include "plurizero/stats.hpp"

namespace plurizero {

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::monomial: return "monomial";
        case BasisKind::chebyshev: return "chebyshev";
        case BasisKind::l2_orthonormal: return "l2_orthonormal";
    }
    return "?";
}

WeightedCompact make_compact(const CompactSpec& spec) {
    const int m =
        (spec.kind == CompactKind::polydisk || spec.kind == CompactKind::unit_ball) ? 2 : 1;
    Weight q = Weight::parse(spec.weight, m);
    switch (spec.kind) {
        case CompactKind::unit_disk: return WeightedCompact::unit_disk(q, spec.boundary_nodes);
        case CompactKind::circle: return WeightedCompact::circle(q, spec.boundary_nodes);
        case CompactKind::interval: return WeightedCompact::interval(q, spec.boundary_nodes);
        case CompactKind::polydisk: return WeightedCompact::polydisk(q, spec.boundary_nodes);
        case CompactKind::unit_ball: return WeightedCompact::unit_ball(q);
        case CompactKind::custom_grid:
            throw std::invalid_argument("make_compact: custom_grid requires explicit rules");
    }
    throw std::logic_error("make_compact: unknown kind");
}

CoefficientLaw make_law(const EnsembleSpec& spec, int num_vars) {
    switch (spec.kind) {
        case LawKind::gaussian: return CoefficientLaw::gaussian();
        case LawKind::fubini_study: return CoefficientLaw::fubini_study();
        case LawKind::heavy_tail_iid:
            return CoefficientLaw::heavy_tail(spec.gamma, spec.delta, num_vars);
    }
    throw std::logic_error("make_law: unknown kind");
}

TestForm make_test_form(const TestFormSpec& spec) {
    Point center;
    for (const auto& c : spec.center) {
        if (c.size() != 2)
            throw std::invalid_argument("test form center entries must be [re, im] pairs");
        center.push_back(Complex{c[0], c[1]});
    }
    return TestForm(std::move(center), spec.radius, spec.profile, spec.amplitude);
}

BasisFamily make_basis(BasisKind kind, const WeightedCompact& kq, int degree) {
    switch (kind) {
        case BasisKind::monomial: {
            BasisFamily basis = monomial_basis(kq.num_vars(), degree);
            const bool unit_sup = kq.unweighted() && (kq.kind() == CompactKind::unit_disk ||
                                                      kq.kind() == CompactKind::circle ||
                                                      kq.kind() == CompactKind::interval ||
                                                      kq.kind() == CompactKind::polydisk);
            if (unit_sup) {
                // |z^alpha| has sup exactly 1 on these sets
                basis.normalization = Normalization::sup_normalized;
                basis.sup_scalings.assign(basis.members.size(), 1.0);
                return basis;
            }
            return normalize_sup(basis, kq);
        }
        case BasisKind::chebyshev: {
            if (kq.kind() != CompactKind::interval)
                throw std::invalid_argument("chebyshev basis requires the interval compact");
            BasisFamily basis = chebyshev_basis(degree);
            if (!kq.unweighted()) return normalize_sup(basis, kq);
            return basis;
        }
        case BasisKind::l2_orthonormal:
            return build_orthonormal_basis(kq.quadrature_for_degree(degree), kq.weight(), degree);
    }
    throw std::logic_error("make_basis: unknown kind");
}

namespace {

std::vector<std::vector<Complex>> dense_members(const BasisFamily& basis) {
    std::vector<std::vector<Complex>> rows;
    rows.reserve(basis.members.size());
    for (const Polynomial& p : basis.members) {
        std::vector<Complex> row = p.dense1();
        row.resize(basis.degree + 1, Complex{0.0, 0.0});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Complex> combine_dense(const CoefficientVector& coeffs,
                                   const std::vector<std::vector<Complex>>& rows, int degree) {
    std::vector<Complex> dense(degree + 1, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == Complex{0.0, 0.0}) continue;
        const std::vector<Complex>& row = rows[j];
        for (std::size_t k = 0; k < row.size(); ++k) dense[k] += coeffs[j] * row[k];
    }
    return dense;
}

ExtremalFunction target_extremal(const WeightedCompact& kq, BasisKind basis_kind,
                                 const std::vector<int>& degrees) {
    if (kq.unweighted() && kq.kind() != CompactKind::custom_grid)
        return ExtremalFunction::analytic(kq);
    // weighted or custom: Bergman growth proxy at twice the largest degree
    const int n_ref = 2 * *std::max_element(degrees.begin(), degrees.end());
    BasisFamily basis = make_basis(BasisKind::l2_orthonormal, kq, n_ref);
    return ExtremalFunction::bergman_numeric(kq, n_ref, std::move(basis));
}

struct TrialOutcome {
    std::vector<double> pairings;  // one per test form
    int attempts = 1;
};

/// One Monte Carlo trial: draw coefficients, extract zeros, pair with forms.
/// Degenerate draws (zero polynomial and the like) are resampled with a
/// derived stream and counted.
TrialOutcome run_trial_m1(const CoefficientLaw& law,
                          const std::vector<std::vector<Complex>>& rows, int degree,
                          const std::vector<TestForm>& forms, std::uint64_t seed,
                          std::uint64_t stream_tag, int n_tag, std::size_t trial) {
    TrialOutcome out;
    const std::size_t dim = rows.size();
    for (int attempt = 0; attempt < 8; ++attempt) {
        TrialRng rng(seed, {stream_tag, static_cast<std::uint64_t>(n_tag),
                            static_cast<std::uint64_t>(trial),
                            static_cast<std::uint64_t>(attempt)});
        const CoefficientVector a = law.sample(dim, rng);
        const std::vector<Complex> dense = combine_dense(a, rows, degree);
        try {
            const ZeroSample zeros = roots_from_dense(dense);
            out.pairings.reserve(forms.size());
            for (const TestForm& phi : forms)
                out.pairings.push_back(pairing_root_sum(zeros, phi).value);
            out.attempts = attempt + 1;
            return out;
        } catch (const RootFindingError&) {
            continue;  // measure-zero degeneracy: resample and count
        }
    }
    throw RootFindingError("run_trial_m1: persistent degenerate draws (check the ensemble)");
}

TrialOutcome run_trial_m2(const CoefficientLaw& law, const BasisFamily& basis,
                          const std::vector<TestForm>& forms, std::uint64_t seed,
                          std::uint64_t stream_tag, int n_tag, std::size_t trial) {
    TrialOutcome out;
    for (int attempt = 0; attempt < 8; ++attempt) {
        TrialRng rng(seed, {stream_tag, static_cast<std::uint64_t>(n_tag),
                            static_cast<std::uint64_t>(trial),
                            static_cast<std::uint64_t>(attempt)});
        const CoefficientVector a = law.sample(basis.members.size(), rng);
        const Polynomial f = linear_combination(a, basis.members);
        if (f.is_zero() || f.degree() < 1) continue;
        try {
            out.pairings.reserve(forms.size());
            for (const TestForm& phi : forms)
                out.pairings.push_back(
                    pairing_poincare_lelong(f, phi, basis.degree).value);
            out.attempts = attempt + 1;
            return out;
        } catch (const PointOnZeroSetError&) {
            continue;
        }
    }
    throw RootFindingError("run_trial_m2: persistent degenerate draws (check the ensemble)");
}

void check_degrees(const ExperimentConfig& cfg, std::size_t min_count) {
    if (cfg.degrees.size() < min_count)
        throw std::invalid_argument("experiment requires >= " + std::to_string(min_count) +
                                    " degrees");
    for (std::size_t i = 1; i < cfg.degrees.size(); ++i) {
        if (cfg.degrees[i] <= cfg.degrees[i - 1])
            throw std::invalid_argument("degrees must be strictly increasing");
    }
}

std::vector<TestForm> build_forms(const ExperimentConfig& cfg, int num_vars) {
    if (cfg.test_forms.empty()) throw std::invalid_argument("at least one test form required");
    std::vector<TestForm> forms;
    for (const TestFormSpec& spec : cfg.test_forms) {
        TestForm phi = make_test_form(spec);
        if (phi.num_vars() != num_vars)
            throw DimensionMismatchError("test form arity does not match the compact");
        forms.push_back(std::move(phi));
    }
    return forms;
}

/// Deterministic finite-n expectation (1/2n) int log Gamma_n dd^c phi.
double gamma_halflog_pairing(const BasisFamily& basis, const TestForm& phi) {
    const DdcGrid& grid = phi.ddc_grid();
    std::vector<double> terms(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const double gamma = bergman_gamma(basis, grid.nodes[i]);
        terms[i] = 0.5 * std::log(gamma) / basis.degree * grid.weights[i];
    }
    return pairwise_sum(terms);
}

/// Trend audit over >= 3 degrees: the last |deviation| must not exceed the
/// first beyond joint MC noise.
bool deviations_shrink_check(const std::vector<PairingStats>& rows, int form_index) {
    std::vector<const PairingStats*> seq;
    for (const PairingStats& r : rows)
        if (r.form_index == form_index) seq.push_back(&r);
    if (seq.size() < 3) return true;
    const PairingStats& first = *seq.front();
    const PairingStats& last = *seq.back();
    const double noise = 3.0 * (first.se + last.se);
    return std::abs(last.deviation) <= std::abs(first.deviation) + noise;
}

}  // namespace

ExperimentReport expected_distribution_experiment(const ExperimentConfig& cfg,
                                                  const ParallelRunner& pool) {
    check_degrees(cfg, 1);
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    ExperimentReport report;
    report.experiment = "expected";
    report.probes = "expected-distribution-weak-star";
    report.seed = cfg.seed;

    const WeightedCompact kq = make_compact(cfg.compact);
    const int m = kq.num_vars();
    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const std::vector<TestForm> forms = build_forms(cfg, m);
    const ExtremalFunction V = target_extremal(kq, cfg.basis, cfg.degrees);
    std::vector<double> targets;
    for (const TestForm& phi : forms) targets.push_back(equilibrium_pairing(V, phi));

    long resamples = 0;
    for (const int n : cfg.degrees) {
        const BasisFamily basis = make_basis(cfg.basis, kq, n);
        const std::vector<std::vector<Complex>> rows =
            m == 1 ? dense_members(basis) : std::vector<std::vector<Complex>>{};
        const std::size_t T = static_cast<std::size_t>(cfg.trials);
        std::vector<std::vector<double>> values(forms.size(), std::vector<double>(T));
        std::vector<int> attempts(T, 1);
        pool.for_each(T, [&](std::size_t t) {
            const TrialOutcome out =
                m == 1 ? run_trial_m1(law, rows, n, forms, cfg.seed, 0xE1ULL, n, t)
                       : run_trial_m2(law, basis, forms, cfg.seed, 0xE1ULL, n, t);
            for (std::size_t f = 0; f < forms.size(); ++f) values[f][t] = out.pairings[f];
            attempts[t] = out.attempts;
        });
        for (int a : attempts) resamples += a - 1;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            const MeanSE ms = mean_se(values[f]);
            PairingStats stats;
            stats.degree = n;
            stats.form_index = static_cast<int>(f);
            stats.mean = ms.mean;
            stats.se = ms.se;
            stats.target = targets[f];
            stats.deviation = ms.mean - targets[f];
            stats.c_phi = forms[f].c_phi();
            report.rows.push_back(stats);
        }
    }
    report.resample_events = resamples;
    bool shrink = true;
    for (std::size_t f = 0; f < forms.size(); ++f)
        shrink = shrink && deviations_shrink_check(report.rows, static_cast<int>(f));
    report.deviations_shrink = shrink;
    report.audits_pass = shrink;
    if (cfg.degrees.size() < 3)
        report.notes.push_back("trend check skipped: fewer than 3 degrees configured");
    return report;
}

ExperimentReport exact_expectation_check(const ExperimentConfig& cfg,
                                         const ParallelRunner& pool) {
    if (cfg.ensemble.kind == LawKind::heavy_tail_iid)
        throw std::invalid_argument(
            "exact_expectation_check requires the gaussian or fubini_study ensemble");
    check_degrees(cfg, 1);
    ExperimentReport report;
    report.experiment = "exact_expectation";
    report.probes = "exact-finite-n-expectation";
    report.seed = cfg.seed;
    report.notes.push_back(
        "expectation normalization: E<[Z-hat], phi> = (1/2n) int log Gamma_n dd^c phi; the "
        "(1/n) variant double-counts the Bergman term in the pairing decomposition and is "
        "not used");

    const WeightedCompact kq = make_compact(cfg.compact);
    const int m = kq.num_vars();
    if (m != 1)
        throw std::invalid_argument("exact_expectation_check is implemented for m = 1");
    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const std::vector<TestForm> forms = build_forms(cfg, m);

    long resamples = 0;
    bool pass_all = true;
    for (const int n : cfg.degrees) {
        const BasisFamily basis = make_basis(cfg.basis, kq, n);
        const std::vector<std::vector<Complex>> rows = dense_members(basis);
        const std::size_t T = static_cast<std::size_t>(cfg.trials);
        std::vector<std::vector<double>> values(forms.size(), std::vector<double>(T));
        std::vector<int> attempts(T, 1);
        pool.for_each(T, [&](std::size_t t) {
            const TrialOutcome out = run_trial_m1(law, rows, n, forms, cfg.seed, 0xE2ULL, n, t);
            for (std::size_t f = 0; f < forms.size(); ++f) values[f][t] = out.pairings[f];
            attempts[t] = out.attempts;
        });
        for (int a : attempts) resamples += a - 1;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            const MeanSE ms = mean_se(values[f]);
            PairingStats stats;
            stats.degree = n;
            stats.form_index = static_cast<int>(f);
            stats.mean = ms.mean;
            stats.se = ms.se;
            stats.exact_target = gamma_halflog_pairing(basis, forms[f]);
            stats.deviation = ms.mean - stats.exact_target;
            stats.c_phi = forms[f].c_phi();
            stats.audit_pass = std::abs(stats.deviation) <= 3.0 * ms.se;
            pass_all = pass_all && stats.audit_pass;
            report.rows.push_back(stats);
        }
    }
    report.resample_events = resamples;
    report.audits_pass = pass_all;
    return report;
}

ExperimentReport variance_decay_experiment(const ExperimentConfig& cfg,
                                           const ParallelRunner& pool) {
    if (cfg.ensemble.alpha < 2.0)
        throw std::invalid_argument("variance runs require the moment exponent alpha >= 2");
    if (cfg.trials < 2) throw std::invalid_argument("variance runs require trials >= 2");
    check_degrees(cfg, 1);
    ExperimentReport report;
    report.experiment = "variance";
    report.probes = "variance-decay-bound";
    report.seed = cfg.seed;

    const WeightedCompact kq = make_compact(cfg.compact);
    const int m = kq.num_vars();
    if (m != 1)
        throw std::invalid_argument("variance_decay_experiment is implemented for m = 1");
    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const std::vector<TestForm> forms = build_forms(cfg, m);
    const MomentCertificate cert = moment_constant(law, cfg.ensemble.alpha, cfg.seed ^ 0xCE27ULL);
    const ExtremalFunction V = target_extremal(kq, cfg.basis, cfg.degrees);

    long resamples = 0;
    bool audits = true;
    for (const int n : cfg.degrees) {
        const BasisFamily basis = make_basis(cfg.basis, kq, n);
        const std::vector<std::vector<Complex>> rows = dense_members(basis);
        const std::size_t T = static_cast<std::size_t>(cfg.trials);
        std::vector<std::vector<double>> values(forms.size(), std::vector<double>(T));
        std::vector<int> attempts(T, 1);
        pool.for_each(T, [&](std::size_t t) {
            const TrialOutcome out = run_trial_m1(law, rows, n, forms, cfg.seed, 0xE3ULL, n, t);
            for (std::size_t f = 0; f < forms.size(); ++f) values[f][t] = out.pairings[f];
            attempts[t] = out.attempts;
        });
        for (int a : attempts) resamples += a - 1;
        const double dn = static_cast<double>(space_dimension(m, n));
        const double d_n = cert.d_at(dn);
        for (std::size_t f = 0; f < forms.size(); ++f) {
            const MeanSE ms = mean_se(values[f]);
            const VarianceEstimate ve = sample_variance(values[f]);
            PairingStats stats;
            stats.degree = n;
            stats.form_index = static_cast<int>(f);
            stats.mean = ms.mean;
            stats.se = ms.se;
            stats.variance = ve.variance;
            stats.variance_se = ve.se_jackknife;
            stats.variance_n2 = ve.variance * n * n;
            stats.target = equilibrium_pairing(V, forms[f]);
            stats.deviation = ms.mean - stats.target;
            stats.c_phi = forms[f].c_phi();
            const double bound = stats.c_phi * stats.c_phi *
                                 std::pow(d_n, 2.0 / cfg.ensemble.alpha);
            stats.audit_ratio = stats.variance_n2 / bound;
            stats.audit_margin = 3.0 * ve.se_jackknife * n * n / bound;
            stats.audit_pass = stats.audit_ratio <= 1.0 + stats.audit_margin;
            audits = audits && stats.audit_pass;
            report.rows.push_back(stats);
        }
    }
    report.resample_events = resamples;
    // slope on the first form, least squares over (log n, log Var)
    if (cfg.degrees.size() >= 4) {
        std::vector<double> lx, ly;
        for (const PairingStats& r : report.rows) {
            if (r.form_index != 0) continue;
            lx.push_back(std::log(static_cast<double>(r.degree)));
            ly.push_back(std::log(r.variance));
        }
        const LineFit fit = fit_line(lx, ly);
        report.variance_slope = fit.slope;
        report.variance_slope_se = fit.slope_se;
    } else {
        report.notes.push_back("slope fit skipped: fewer than 4 degrees configured");
    }
    report.audits_pass = audits;
    return report;
}

ExperimentReport almost_sure_trajectory(const ExperimentConfig& cfg, const ParallelRunner& pool) {
    check_degrees(cfg, 1);
    ExperimentReport report;
    report.experiment = "trajectory";
    report.probes = "almost-sure-equidistribution";
    report.seed = cfg.seed;

    const WeightedCompact kq = make_compact(cfg.compact);
    const int m = kq.num_vars();
    if (m != 1)
        throw std::invalid_argument("almost_sure_trajectory is implemented for m = 1");
    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const std::vector<TestForm> forms = build_forms(cfg, m);
    const ExtremalFunction V = target_extremal(kq, cfg.basis, cfg.degrees);
    std::vector<double> targets;
    for (const TestForm& phi : forms) targets.push_back(equilibrium_pairing(V, phi));

    const MomentCertificate cert = moment_constant(law, cfg.ensemble.alpha, cfg.seed ^ 0xCE27ULL);
    const int n_lo = cfg.degrees.front();
    const int n_hi = cfg.degrees.back();
    report.summability = summability_audit(law, cfg.ensemble.alpha, m, std::max(n_hi, 50), cert);
    if (!report.summability->convergent) {
        report.notes.push_back("summability audit did not certify convergence");
        report.audits_pass = false;
    }

    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<std::vector<double>> pairings(forms.size(), std::vector<double>(count));
    std::vector<int> attempts(count, 1);
    long resamples = 0;
    pool.for_each(count, [&](std::size_t i) {
        const int n = n_lo + static_cast<int>(i);
        const BasisFamily basis = make_basis(cfg.basis, kq, n);
        const std::vector<std::vector<Complex>> rows = dense_members(basis);
        const TrialOutcome out = run_trial_m1(law, rows, n, forms, cfg.seed, 0xE4ULL, n, 0);
        for (std::size_t f = 0; f < forms.size(); ++f) pairings[f][i] = out.pairings[f];
        attempts[i] = out.attempts;
    });
    for (int a : attempts) resamples += a - 1;
    report.resample_events = resamples;

    std::vector<double> worst(count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const int n = n_lo + static_cast<int>(i);
        for (std::size_t f = 0; f < forms.size(); ++f) {
            TrajectoryRow row;
            row.degree = n;
            row.form_index = static_cast<int>(f);
            row.pairing = pairings[f][i];
            row.target = targets[f];
            row.deviation = pairings[f][i] - targets[f];
            report.trajectory.push_back(row);
            worst[i] = std::max(worst[i], std::abs(row.deviation));
        }
    }
    // sup over the last quartile of degrees
    const std::size_t q3 = count - std::max<std::size_t>(1, count / 4);
    double sup = 0.0;
    for (std::size_t i = q3; i < count; ++i) sup = std::max(sup, worst[i]);
    report.last_quartile_sup = sup;
    // suffix envelope sampled at the quartile marks must not increase
    auto envelope_at = [&](std::size_t k) {
        double e = 0.0;
        for (std::size_t i = k; i < count; ++i) e = std::max(e, worst[i]);
        return e;
    };
    const double e0 = envelope_at(0);
    const double e2 = envelope_at(count / 2);
    const double e3 = envelope_at(q3);
    report.envelope_decreasing = e2 <= e0 * (1.0 + 1e-12) && e3 <= e2 * (1.0 + 1e-12);
    report.audits_pass = report.audits_pass && report.envelope_decreasing;
    return report;
}

BMCertificate bm_constant(const WeightedCompact& kq, const QuadratureRule& sigma, int degree,
                          const std::string& measure_id) {
    const BasisFamily basis = build_orthonormal_basis(sigma, kq.weight(), degree);
    const std::vector<Point> grid = kq.sup_points();
    double best = 0.0;
    Point argmax = grid.front();
    std::vector<Complex> argmax_values;
    for (const Point& x : grid) {
        const std::vector<Complex> values = eval_basis(basis, x);
        const double k_diag =
            bergman_gamma(values) * std::exp(-2.0 * degree * kq.weight()(x));
        if (k_diag > best) {
            best = k_diag;
            argmax = x;
            argmax_values = values;
        }
    }
    BMCertificate cert;
    cert.degree = degree;
    cert.r_n = std::sqrt(best);
    cert.r_n_root = std::pow(cert.r_n, 1.0 / degree);
    cert.measure_id = measure_id;
    // sharpness witness: the kernel section at the argmax attains the ratio
    CoefficientVector coeffs(argmax_values.size());
    double l2 = 0.0;
    for (std::size_t j = 0; j < argmax_values.size(); ++j) {
        coeffs[j] = std::conj(argmax_values[j]);
        l2 += std::norm(argmax_values[j]);
    }
    const Polynomial witness = linear_combination(coeffs, basis.members);
    cert.witness_ratio = kq.weighted_sup(witness, degree) / std::sqrt(l2);
    return cert;
}

ExperimentReport bm_experiment(const ExperimentConfig& cfg) {
    check_degrees(cfg, 1);
    ExperimentReport report;
    report.experiment = "bm";
    report.probes = "bernstein-markov-constants";
    report.seed = cfg.seed;
    const WeightedCompact kq = make_compact(cfg.compact);
    for (const int n : cfg.degrees) {
        const QuadratureRule sigma = kq.quadrature_for_degree(n);
        const std::string id =
            to_string(kq.kind()) + ":boundary:" + std::to_string(sigma.size());
        report.bm.push_back(bm_constant(kq, sigma, n, id));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < report.bm.size(); ++i)
        decreasing = decreasing && report.bm[i].r_n_root <= report.bm[i - 1].r_n_root + 1e-12;
    report.audits_pass = decreasing;
    if (!decreasing) report.notes.push_back("R_n^{1/n} failed the decreasing check");
    return report;
}

ExperimentReport moment_experiment(const ExperimentConfig& cfg) {
    check_degrees(cfg, 1);
    ExperimentReport report;
    report.experiment = "moment";
    report.probes = "moment-condition";
    report.seed = cfg.seed;
    const int m = (cfg.compact.kind == CompactKind::polydisk ||
                   cfg.compact.kind == CompactKind::unit_ball)
                      ? 2
                      : 1;
    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const MomentCertificate cert = moment_constant(law, cfg.ensemble.alpha, cfg.seed ^ 0xCE27ULL);
    if (law.kind() != LawKind::heavy_tail_iid)
        report.signed_alpha1 = signed_log_moment(law.kind());
    const std::size_t dim =
        static_cast<std::size_t>(space_dimension(m, cfg.degrees.front()));
    const std::size_t trials = std::max<std::size_t>(10000, cfg.trials);
    report.moment_check = empirical_moment_check(law, dim, cfg.ensemble.alpha, trials, cfg.seed);
    report.summability =
        summability_audit(law, cfg.ensemble.alpha, m, std::max(cfg.degrees.back(), 50), cert);
    report.audits_pass = report.moment_check->pass && report.summability->convergent;
    return report;
}

}  // namespace plurizero
