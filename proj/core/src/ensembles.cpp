#include "plurizero/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plurizero/quadrature.hpp"
#include "plurizero/stats.hpp"

namespace plurizero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double heavy_log_factor(double r, double gamma) {
    const double l = std::log(std::numbers::e + r);
    return std::pow(l, gamma + 1.0);
}

/// unnormalized radial mass 2 pi r / (1 + r^2 log(e+r)^{gamma+1}), dr
double heavy_radial_density(double r, double gamma) {
    return kTwoPi * r / (1.0 + r * r * heavy_log_factor(r, gamma));
}

}  // namespace

std::string to_string(LawKind kind) {
    switch (kind) {
        case LawKind::gaussian: return "gaussian";
        case LawKind::fubini_study: return "fubini_study";
        case LawKind::heavy_tail_iid: return "heavy_tail_iid";
    }
    return "?";
}

std::string to_string(MomentMethod method) {
    switch (method) {
        case MomentMethod::closed_form_radial: return "closed_form_radial";
        case MomentMethod::quadrature: return "quadrature";
        case MomentMethod::monte_carlo_bound: return "monte_carlo_bound";
    }
    return "?";
}

struct CoefficientLaw::Data {
    LawKind kind = LawKind::gaussian;
    int num_vars = 1;
    double gamma = 0.0;
    double delta = 0.0;
    double c_norm = 0.0;  // heavy tail density normalization (= density bound)
    // radial inverse-CDF table in s = log1p(r): cdf_[i] at radius r_[i]
    std::vector<double> radius_table;
    std::vector<double> cdf_table;
};

CoefficientLaw CoefficientLaw::gaussian() {
    auto d = std::make_shared<Data>();
    d->kind = LawKind::gaussian;
    return CoefficientLaw(std::move(d));
}

CoefficientLaw CoefficientLaw::fubini_study() {
    auto d = std::make_shared<Data>();
    d->kind = LawKind::fubini_study;
    return CoefficientLaw(std::move(d));
}

CoefficientLaw CoefficientLaw::heavy_tail(double gamma, double delta, int num_vars) {
    if (!(gamma > 2.0 * num_vars))
        throw std::invalid_argument("heavy_tail: gamma must exceed 2m = " +
                                    std::to_string(2 * num_vars));
    auto d = std::make_shared<Data>();
    d->kind = LawKind::heavy_tail_iid;
    d->num_vars = num_vars;
    d->gamma = gamma;

    // normalization: c * integral of the radial mass = 1; the tail integrand
    // is written as 2 pi / (e^{-2s} + log(e + e^s)^{gamma+1}) with s = log r
    // so it stays finite for arbitrarily large s
    const double head = integrate(
        [gamma](double r) { return heavy_radial_density(r, gamma); }, 0.0, 1.0, 1e-13, 1e-13);
    const double tail = integrate_to_inf(
        [gamma](double s) {
            const double log_factor = s + std::log1p(std::exp(1.0 - s));  // log(e + e^s)
            return kTwoPi / (std::exp(-2.0 * s) + std::pow(log_factor, gamma + 1.0));
        },
        0.0, 1e-13, 1e-13);
    d->c_norm = 1.0 / (head + tail);

    // tail bound: P(log|z| > R) < (2 pi c / gamma) R^{-gamma} for all R >= 1;
    // the default certificate carries 1.5x headroom over that rigorous bound.
    d->delta = delta > 0.0 ? delta : 1.5 * kTwoPi * d->c_norm / gamma;

    // inverse-CDF table: dense in r on [0, 1], then in s = log r on [0, 42]
    const std::size_t head_steps = 2048, tail_steps = 8400;
    d->radius_table.reserve(head_steps + tail_steps + 1);
    d->cdf_table.reserve(head_steps + tail_steps + 1);
    d->radius_table.push_back(0.0);
    d->cdf_table.push_back(0.0);
    double acc = 0.0;
    double prev_r = 0.0, prev_f = 0.0;
    for (std::size_t i = 1; i <= head_steps; ++i) {
        const double r = static_cast<double>(i) / head_steps;
        const double f = d->c_norm * heavy_radial_density(r, gamma);
        acc += 0.5 * (prev_f + f) * (r - prev_r);
        d->radius_table.push_back(r);
        d->cdf_table.push_back(acc);
        prev_r = r;
        prev_f = f;
    }
    for (std::size_t i = 1; i <= tail_steps; ++i) {
        const double s = 42.0 * static_cast<double>(i) / tail_steps;
        const double r = std::exp(s);
        const double f = d->c_norm * heavy_radial_density(r, gamma);
        acc += 0.5 * (prev_f + f) * (r - prev_r);
        d->radius_table.push_back(r);
        d->cdf_table.push_back(std::min(acc, 1.0));
        prev_r = r;
        prev_f = f;
    }
    return CoefficientLaw(std::move(d));
}

LawKind CoefficientLaw::kind() const { return data_->kind; }
int CoefficientLaw::num_vars() const { return data_->num_vars; }

double CoefficientLaw::gamma() const {
    if (data_->kind != LawKind::heavy_tail_iid)
        throw std::logic_error("gamma: heavy-tail law only");
    return data_->gamma;
}

double CoefficientLaw::delta() const {
    if (data_->kind != LawKind::heavy_tail_iid)
        throw std::logic_error("delta: heavy-tail law only");
    return data_->delta;
}

double CoefficientLaw::density_bound() const {
    if (data_->kind != LawKind::heavy_tail_iid)
        throw std::logic_error("density_bound: heavy-tail law only");
    return data_->c_norm;
}

double CoefficientLaw::sample_radius(TrialRng& rng) const {
    if (data_->kind != LawKind::heavy_tail_iid)
        throw std::logic_error("sample_radius: heavy-tail law only");
    const double u = rng.uniform();
    const auto& cdf = data_->cdf_table;
    const auto& rad = data_->radius_table;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.begin()) return 0.0;
    if (it == cdf.end()) return rad.back();  // truncated far tail (mass ~ 1e-9)
    const std::size_t hi = static_cast<std::size_t>(it - cdf.begin());
    const std::size_t lo = hi - 1;
    const double span = cdf[hi] - cdf[lo];
    const double t = span > 0.0 ? (u - cdf[lo]) / span : 0.0;
    return rad[lo] + t * (rad[hi] - rad[lo]);
}

CoefficientVector CoefficientLaw::sample(std::size_t dim, TrialRng& rng) const {
    if (dim == 0) throw std::invalid_argument("CoefficientLaw::sample: dim must be >= 1");
    CoefficientVector a(dim);
    switch (data_->kind) {
        case LawKind::gaussian:
            for (Complex& x : a) x = rng.complex_normal();
            return a;
        case LawKind::fubini_study: {
            // dehomogenized (dim+1)-Gaussian: a_j = w_j / w_0
            const Complex w0 = rng.complex_normal();
            for (Complex& x : a) x = rng.complex_normal();
            if (w0 == Complex{0.0, 0.0}) {
                // probability-zero guard; fall back to a fixed tiny divisor
                for (Complex& x : a) x /= Complex{1e-300, 0.0};
                return a;
            }
            for (Complex& x : a) x /= w0;
            return a;
        }
        case LawKind::heavy_tail_iid:
            for (Complex& x : a) {
                const double r = sample_radius(rng);
                const double t = kTwoPi * rng.uniform();
                x = r * Complex{std::cos(t), std::sin(t)};
            }
            return a;
    }
    throw std::logic_error("CoefficientLaw::sample: unknown kind");
}

double MomentCertificate::d_at(double dim) const {
    if (!dim_dependent) return d_value;
    return b_certified * std::pow(dim, alpha / gamma);
}

double radial_log_moment(LawKind kind, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("radial_log_moment: alpha must be >= 0");
    auto integrand = [kind, alpha](double r) {
        const double base = std::abs(std::log(r));
        const double powv = std::pow(base, alpha);
        if (kind == LawKind::gaussian) return 2.0 * r * powv * std::exp(-r * r);
        return 2.0 * r * powv / ((1.0 + r * r) * (1.0 + r * r));
    };
    if (kind == LawKind::gaussian) {
        return integrate(integrand, 0.0, 1.0, 1e-14, 1e-13) +
               integrate(integrand, 1.0, 9.0, 1e-14, 1e-13);
    }
    if (kind == LawKind::fubini_study) {
        return integrate(integrand, 0.0, 1.0, 1e-14, 1e-13) +
               integrate_to_inf(integrand, 1.0, 1e-14, 1e-13);
    }
    throw std::invalid_argument("radial_log_moment: closed-form radial laws only");
}

double signed_log_moment(LawKind kind) {
    auto integrand = [kind](double r) {
        const double lg = std::log(r);
        if (kind == LawKind::gaussian) return 2.0 * r * lg * std::exp(-r * r);
        return 2.0 * r * lg / ((1.0 + r * r) * (1.0 + r * r));
    };
    if (kind == LawKind::gaussian) {
        return integrate(integrand, 0.0, 1.0, 1e-14, 1e-13) +
               integrate(integrand, 1.0, 9.0, 1e-14, 1e-13);
    }
    if (kind == LawKind::fubini_study) {
        return integrate(integrand, 0.0, 1.0, 1e-14, 1e-13) +
               integrate_to_inf(integrand, 1.0, 1e-14, 1e-13);
    }
    throw std::invalid_argument("signed_log_moment: closed-form radial laws only");
}

namespace {

CoefficientVector random_unit_vector(std::size_t dim, TrialRng& rng) {
    CoefficientVector v(dim);
    double norm2 = 0.0;
    for (Complex& x : v) {
        x = rng.complex_normal();
        norm2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& x : v) x *= inv;
    return v;
}

MomentCheckRow estimate_log_moment(const CoefficientLaw& law, const CoefficientVector& v,
                                   double alpha, std::size_t trials, TrialRng& rng) {
    std::vector<double> values;
    values.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const CoefficientVector a = law.sample(v.size(), rng);
        Complex inner = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) inner += a[j] * v[j];
        const double mag = std::abs(inner);
        if (mag == 0.0) continue;  // probability zero
        values.push_back(std::pow(std::abs(std::log(mag)), alpha));
    }
    const MeanSE ms = mean_se(values);
    return {ms.mean, ms.se};
}

}  // namespace

MomentCertificate moment_constant(const CoefficientLaw& law, double alpha, std::uint64_t seed) {
    if (alpha < 1.0) throw std::invalid_argument("moment_constant: alpha must be >= 1");
    MomentCertificate cert;
    cert.alpha = alpha;
    if (law.kind() == LawKind::gaussian || law.kind() == LawKind::fubini_study) {
        cert.method = MomentMethod::closed_form_radial;
        cert.d_value = radial_log_moment(law.kind(), alpha);
        cert.dim_dependent = false;
        return cert;
    }
    // heavy tail: D_n = B d_n^{alpha/gamma} with B estimated over unit vectors
    if (!(alpha < law.gamma()))
        throw std::invalid_argument("moment_constant: heavy tail requires alpha < gamma");
    cert.method = MomentMethod::monte_carlo_bound;
    cert.gamma = law.gamma();
    cert.dim_dependent = true;
    double best = 0.0, best_se = 0.0;
    const std::size_t dims[] = {2, 8, 32};
    int stream = 0;
    for (std::size_t dim : dims) {
        for (int k = 0; k < 4; ++k, ++stream) {
            TrialRng rng(seed, {0xB05EULL, static_cast<std::uint64_t>(stream)});
            const CoefficientVector v = random_unit_vector(dim, rng);
            const MomentCheckRow row = estimate_log_moment(law, v, alpha, 20000, rng);
            const double scale = std::pow(static_cast<double>(dim), alpha / law.gamma());
            if (row.estimate / scale > best) {
                best = row.estimate / scale;
                best_se = row.se / scale;
            }
        }
    }
    cert.b_estimate = best;
    cert.b_se = best_se;
    cert.b_certified = best + 3.0 * best_se;
    cert.d_value = cert.b_certified;  // reference at d_n = 1
    return cert;
}

MomentCheckReport empirical_moment_check(const CoefficientLaw& law, std::size_t dim, double alpha,
                                         std::size_t trials, std::uint64_t seed,
                                         std::size_t num_vectors) {
    if (trials < 10000)
        throw std::invalid_argument("empirical_moment_check: trials must be >= 10^4");
    MomentCheckReport report;
    report.alpha = alpha;
    report.dim = dim;
    report.trials = trials;
    const MomentCertificate cert = moment_constant(law, alpha, seed);
    report.certificate = cert.d_at(static_cast<double>(dim));
    bool pass = true;
    for (std::size_t k = 0; k < num_vectors; ++k) {
        TrialRng rng(seed, {0xC4ECULL, static_cast<std::uint64_t>(k)});
        const CoefficientVector v = random_unit_vector(dim, rng);
        const MomentCheckRow row = estimate_log_moment(law, v, alpha, trials, rng);
        report.per_vector.push_back(row);
        if (row.estimate > report.max_estimate) {
            report.max_estimate = row.estimate;
            report.max_se = row.se;
        }
        if (law.kind() == LawKind::heavy_tail_iid) {
            pass = pass && row.estimate <= report.certificate + 3.0 * row.se;
        } else {
            pass = pass && std::abs(row.estimate - report.certificate) <= 3.0 * row.se;
        }
    }
    report.pass = pass;
    return report;
}

SummabilityReport summability_audit(const CoefficientLaw& law, double alpha, int num_vars,
                                    int n_max, const MomentCertificate& certificate) {
    if (n_max < 4) throw std::invalid_argument("summability_audit: n_max must be >= 4");
    SummabilityReport report;
    report.alpha = alpha;
    report.num_vars = num_vars;
    report.terms.reserve(n_max);
    report.partial_sums.reserve(n_max);
    double acc = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double dn = static_cast<double>(space_dimension(num_vars, n));
        const double d_n = law.kind() == LawKind::heavy_tail_iid
                               ? certificate.d_at(dn)
                               : certificate.d_value;
        const double term = std::pow(d_n, 2.0 / alpha) / (static_cast<double>(n) * n);
        report.terms.push_back(term);
        acc += term;
        report.partial_sums.push_back(acc);
    }
    // fitted exponent over the tail half
    std::vector<double> lx, ly;
    for (int n = n_max / 2; n <= n_max; ++n) {
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(report.terms[n - 1]));
    }
    report.fitted_tail_exponent = fit_line(lx, ly).slope;
    report.convergent = report.fitted_tail_exponent < -1.0;
    return report;
}

}  // namespace plurizero
