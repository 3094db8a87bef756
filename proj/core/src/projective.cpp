#include "plurizero/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plurizero/errors.hpp"
#include "plurizero/stats.hpp"

namespace plurizero {

namespace {

double log_multinomial(int n, const MultiIndex& idx) {
    double acc = std::lgamma(n + 1.0);
    int rest = n;
    for (int e : idx.exponents) {
        acc -= std::lgamma(e + 1.0);
        rest -= e;
    }
    acc -= std::lgamma(rest + 1.0);
    return acc;
}

}  // namespace

SectionSpace make_section_space(int m, int n) {
    if (m != 1 && m != 2)
        throw std::invalid_argument("make_section_space: base dimension must be 1 or 2");
    if (n < 0) throw std::invalid_argument("make_section_space: degree must be >= 0");
    SectionSpace space;
    space.m = m;
    space.n = n;
    space.indices = enumerate_multi_indices(m, n);
    space.log_coeffs.reserve(space.indices.size());
    for (const MultiIndex& idx : space.indices)
        space.log_coeffs.push_back(0.5 * log_multinomial(n, idx));
    return space;
}

BasisFamily SectionSpace::affine_basis() const {
    BasisFamily basis;
    basis.num_vars = m;
    basis.degree = n;
    basis.normalization = Normalization::fs_orthonormal;
    basis.first_is_constant = true;
    for (std::size_t j = 0; j < indices.size(); ++j)
        basis.members.push_back(Polynomial::monomial(indices[j], std::exp(log_coeffs[j])));
    basis.validate();
    return basis;
}

namespace {

/// metric-weighted member values h_j(z) = coef_j z^alpha (1+||z||^2)^{-n/2},
/// computed in log scale so neither factor overflows.
void metric_member_values(const SectionSpace& space, const Point& z, std::vector<Complex>& out) {
    if (static_cast<int>(z.size()) != space.m)
        throw DimensionMismatchError("projective: point dimension mismatch");
    double norm2 = 0.0;
    for (const Complex& c : z) norm2 += std::norm(c);
    const double half_metric = 0.5 * space.n * std::log1p(norm2);
    std::vector<double> log_abs(space.m);
    std::vector<double> args(space.m);
    for (int v = 0; v < space.m; ++v) {
        log_abs[v] = std::log(std::abs(z[v]));  // -inf at 0 handled below
        args[v] = std::arg(z[v]);
    }
    out.resize(space.indices.size());
    for (std::size_t j = 0; j < space.indices.size(); ++j) {
        const MultiIndex& idx = space.indices[j];
        double lg = space.log_coeffs[j] - half_metric;
        double angle = 0.0;
        bool zero = false;
        for (int v = 0; v < space.m; ++v) {
            const int e = idx.exponents[v];
            if (e == 0) continue;
            if (z[v] == Complex{0.0, 0.0}) {
                zero = true;
                break;
            }
            lg += e * log_abs[v];
            angle += e * args[v];
        }
        out[j] = zero ? Complex{0.0, 0.0} : std::exp(lg) * Complex{std::cos(angle), std::sin(angle)};
    }
}

}  // namespace

double fs_section_norm(const CoefficientVector& coeffs, const SectionSpace& space,
                       const Point& z) {
    if (coeffs.size() != space.dimension())
        throw DimensionMismatchError("fs_section_norm: coefficient length mismatch");
    std::vector<Complex> h;
    metric_member_values(space, z, h);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) acc += coeffs[j] * h[j];
    return std::abs(acc);
}

double fs_section_norm_chart2(const CoefficientVector& coeffs, const SectionSpace& space,
                              Complex u) {
    if (space.m != 1)
        throw DimensionMismatchError("fs_section_norm_chart2: m = 1 only");
    // In the chart w1 = 1 the section's polynomial reverses its coefficients.
    const std::size_t d = space.dimension();
    CoefficientVector reversed(d);
    for (std::size_t j = 0; j < d; ++j) reversed[j] = coeffs[d - 1 - j];
    return fs_section_norm(reversed, space, {u});
}

double bergman_gamma_sections(const SectionSpace& space, const Point& z) {
    std::vector<Complex> h;
    metric_member_values(space, z, h);
    double s = 0.0;
    for (const Complex& v : h) s += std::norm(v);
    return s;
}

SectionSystem sample_section_system(const SectionSpace& space, const CoefficientLaw& law,
                                    std::uint64_t seed, int trial, int attempt) {
    SectionSystem system;
    system.codim = space.m;
    for (int j = 0; j < space.m; ++j) {
        TrialRng rng(seed, {0xCF00ULL + static_cast<std::uint64_t>(j),
                            static_cast<std::uint64_t>(space.n),
                            static_cast<std::uint64_t>(trial),
                            static_cast<std::uint64_t>(attempt)});
        system.sections.push_back(law.sample(space.dimension(), rng));
    }
    return system;
}

int ProjectiveZeros::total_multiplicity() const {
    int s = affine.total_multiplicity();
    for (int m : infinity_mult) s += m;
    return s;
}

namespace {

/// dense affine coefficients a_j * exp(log_coeff_j) for m = 1
std::vector<Complex> cp1_dense(const SectionSystem& system, const SectionSpace& space) {
    std::vector<Complex> dense(space.dimension());
    for (std::size_t j = 0; j < dense.size(); ++j)
        dense[j] = system.sections[0][j] * std::exp(space.log_coeffs[j]);
    return dense;
}

Polynomial cp2_affine_poly(const CoefficientVector& coeffs, const SectionSpace& space) {
    Polynomial p(2);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == Complex{0.0, 0.0}) continue;
        p.set_coefficient(space.indices[j], coeffs[j] * std::exp(space.log_coeffs[j]));
    }
    return p;
}

/// Homogenize to degree n and restrict to the chart w_k = 1: returns the
/// bivariate polynomial in the remaining coordinates (u = w0, v = the other).
Polynomial cp2_chart_poly(const CoefficientVector& coeffs, const SectionSpace& space,
                          int chart) {
    Polynomial p(2);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == Complex{0.0, 0.0}) continue;
        const int a1 = space.indices[j].exponents[0];
        const int a2 = space.indices[j].exponents[1];
        const int a0 = space.n - a1 - a2;
        // homogeneous exponents (a0, a1, a2) on (w0, w1, w2)
        MultiIndex idx({0, 0});
        if (chart == 1) {  // w1 = 1: variables (w0, w2)
            idx.exponents[0] = a0;
            idx.exponents[1] = a2;
        } else {  // w2 = 1: variables (w0, w1)
            idx.exponents[0] = a0;
            idx.exponents[1] = a1;
        }
        const Complex c = coeffs[j] * std::exp(space.log_coeffs[j]);
        p.set_coefficient(idx, p.coefficient(idx) + c);
    }
    return p;
}

/// leading form of the affine pair restricted to the line at infinity, as a
/// univariate polynomial in t = z2/z1 (coefficients of z1^{n-k} z2^k).
std::vector<Complex> infinity_slice(const Polynomial& p, int n) {
    std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
    for (const auto& [idx, v] : p.coeffs()) {
        if (idx.total_degree() == n) c[idx.exponents[1]] = v;
    }
    return c;
}

bool has_infinity_intersection(const Polynomial& p, const Polynomial& q, int n) {
    const std::vector<Complex> a = infinity_slice(p, n);
    const std::vector<Complex> b = infinity_slice(q, n);
    double norm_a = 0.0, norm_b = 0.0;
    for (const Complex& x : a) norm_a = std::max(norm_a, std::abs(x));
    for (const Complex& x : b) norm_b = std::max(norm_b, std::abs(x));
    if (norm_a == 0.0 || norm_b == 0.0) return true;  // a curve contains the line at infinity
    // shared projective root of the two degree-n binary forms <=> resultant 0;
    // detected by root matching, which is robust enough at desk degrees
    ZeroSample ra, rb;
    try {
        ra = roots_from_dense(a);
        rb = roots_from_dense(b);
    } catch (const RootFindingError&) {
        return true;
    }
    // roots at t = infinity (degree drop) mean the form vanishes at [0:0:1]
    const int drop_a = n - ra.source_degree;
    const int drop_b = n - rb.source_degree;
    if (drop_a > 0 && drop_b > 0) return true;
    for (const Point& x : ra.points) {
        for (const Point& y : rb.points) {
            if (std::abs(x[0] - y[0]) <= 1e-7 * std::max(1.0, std::abs(x[0]))) return true;
        }
    }
    return false;
}

}  // namespace

ProjectiveZeros zero_locus_cp(const SectionSystem& system, const SectionSpace& space) {
    if (system.codim != space.m)
        throw DimensionMismatchError("zero_locus_cp: point case requires k = m");
    ProjectiveZeros out;
    if (space.m == 1) {
        std::vector<Complex> dense = cp1_dense(system, space);
        // zeros at infinity = exactly-vanishing top coefficients of the section
        double max_a = 0.0;
        for (const Complex& a : system.sections[0]) max_a = std::max(max_a, std::abs(a));
        if (max_a == 0.0) throw RootFindingError("zero_locus_cp: zero section");
        int top = static_cast<int>(dense.size()) - 1;
        while (top > 0 && std::abs(system.sections[0][top]) <= 1e-14 * max_a) --top;
        const int inf_mult = static_cast<int>(dense.size()) - 1 - top;
        dense.resize(top + 1);
        RootOptions options;
        options.trim_rel_tol = 0.0;  // degree bookkeeping already done here
        out.affine = roots_from_dense(dense, options);
        out.affine.source_degree = space.n;
        if (inf_mult > 0) {
            out.infinity.push_back({});
            out.infinity_mult.push_back(inf_mult);
        }
        return out;
    }

    // m = 2
    const Polynomial p = cp2_affine_poly(system.sections[0], space);
    const Polynomial q = cp2_affine_poly(system.sections[1], space);
    out.affine = solve_system_2d(p, q);
    out.affine.source_degree = space.n;
    out.affine.codim = 2;
    if (!has_infinity_intersection(p, q, space.n)) return out;

    // points at infinity live in chart w1 = 1 (u = w0 = 0) or chart w2 = 1;
    // solve both and deduplicate on the overlap
    struct InfPoint {
        Complex w1, w2;
        int mult;
    };
    std::vector<InfPoint> found;
    auto try_chart = [&](int chart) {
        const Polynomial pc = cp2_chart_poly(system.sections[0], space, chart);
        const Polynomial qc = cp2_chart_poly(system.sections[1], space, chart);
        ZeroSample zs;
        try {
            zs = solve_system_2d(pc, qc);
        } catch (const NonGenericSystemError&) {
            throw;
        } catch (const RootFindingError&) {
            return;
        }
        for (std::size_t i = 0; i < zs.points.size(); ++i) {
            const Complex u = zs.points[i][0];
            if (std::abs(u) > 1e-8) continue;  // affine point, already counted
            const Complex v = zs.points[i][1];
            const InfPoint cand = chart == 1 ? InfPoint{1.0, v, zs.multiplicities[i]}
                                             : InfPoint{v, 1.0, zs.multiplicities[i]};
            bool dup = false;
            for (const InfPoint& f : found) {
                // projective equality [w1 : w2]
                if (std::abs(f.w1 * cand.w2 - f.w2 * cand.w1) <=
                    1e-7 * (std::abs(f.w1 * cand.w2) + std::abs(f.w2 * cand.w1) + 1.0)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) found.push_back(cand);
        }
    };
    try_chart(1);
    try_chart(2);
    for (const InfPoint& f : found) {
        out.infinity.push_back({f.w1, f.w2});
        out.infinity_mult.push_back(f.mult);
    }
    return out;
}

std::array<double, 3> to_sphere(Complex z) {
    const double n2 = std::norm(z);
    if (!std::isfinite(n2) || n2 > 1e300) return {0.0, 0.0, 1.0};
    const double denom = 1.0 + n2;
    return {2.0 * z.real() / denom, 2.0 * z.imag() / denom, (n2 - 1.0) / denom};
}

std::vector<SphereCap> standard_caps() {
    std::vector<SphereCap> caps;
    const double latitudes[] = {60.0, 20.0, -20.0, -60.0};
    const double longitudes[] = {0.0, 90.0, 180.0, 270.0};
    const double cos_angle = 0.5;  // 60-degree caps: FS mass 1/4
    for (double lat : latitudes) {
        const double theta = lat * std::numbers::pi / 180.0;
        for (double lon : longitudes) {
            const double phi = lon * std::numbers::pi / 180.0;
            SphereCap cap;
            cap.axis = {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
                        std::sin(theta)};
            cap.cos_angle = cos_angle;
            cap.target = 0.5 * (1.0 - cos_angle);
            caps.push_back(cap);
        }
    }
    return caps;
}

bool cap_contains(const SphereCap& cap, const std::array<double, 3>& x) {
    return cap.axis[0] * x[0] + cap.axis[1] * x[1] + cap.axis[2] * x[2] >= cap.cos_angle;
}

double fs_window_mass(const Cp2Window& w) {
    auto a = [](double u, double v) { return 1.0 / (1.0 + u + v); };
    const double u1 = w.r1_lo * w.r1_lo;
    const double v1 = w.r2_lo * w.r2_lo;
    const bool u_inf = w.r1_hi <= 0.0;
    const bool v_inf = w.r2_hi <= 0.0;
    const double u2 = u_inf ? 0.0 : w.r1_hi * w.r1_hi;
    const double v2 = v_inf ? 0.0 : w.r2_hi * w.r2_hi;
    const double a11 = a(u1, v1);
    const double a21 = u_inf ? 0.0 : a(u2, v1);
    const double a12 = v_inf ? 0.0 : a(u1, v2);
    const double a22 = (u_inf || v_inf) ? 0.0 : a(u2, v2);
    return a11 - a21 - a12 + a22;
}

std::vector<Cp2Window> standard_windows() {
    const double edges[] = {0.0, 0.6, 1.3, -1.0};  // -1 = unbounded
    std::vector<Cp2Window> windows;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Cp2Window w;
            w.r1_lo = edges[i];
            w.r1_hi = edges[i + 1];
            w.r2_lo = edges[j];
            w.r2_hi = edges[j + 1];
            w.target = fs_window_mass(w);
            windows.push_back(w);
        }
    }
    return windows;
}

bool window_contains(const Cp2Window& w, const Point& z) {
    const double r1 = std::abs(z[0]);
    const double r2 = std::abs(z[1]);
    if (r1 < w.r1_lo || (w.r1_hi > 0.0 && r1 >= w.r1_hi)) return false;
    if (r2 < w.r2_lo || (w.r2_hi > 0.0 && r2 >= w.r2_hi)) return false;
    return true;
}

ExperimentReport global_equidist_experiment(const ExperimentConfig& cfg,
                                            const ParallelRunner& pool) {
    const int m = cfg.projective_m;
    if (m != 1 && m != 2)
        throw std::invalid_argument("global_equidist_experiment: projective.m must be 1 or 2");
    if (cfg.projective_degrees.empty())
        throw std::invalid_argument("global_equidist_experiment: projective.degrees required");
    if (cfg.projective_trials < 1)
        throw std::invalid_argument("global_equidist_experiment: projective.trials >= 1");

    ExperimentReport report;
    report.experiment = "projective";
    report.probes = "global-equidistribution";
    report.seed = cfg.seed;

    const CoefficientLaw law = make_law(cfg.ensemble, m);
    const std::vector<SphereCap> caps = m == 1 ? standard_caps() : std::vector<SphereCap>{};
    const std::vector<Cp2Window> windows = m == 2 ? standard_windows() : std::vector<Cp2Window>{};
    const std::size_t num_windows = m == 1 ? caps.size() : windows.size();

    long nongeneric = 0;
    bool audits = true;
    for (const int n : cfg.projective_degrees) {
        const SectionSpace space = make_section_space(m, n);
        const std::size_t T = static_cast<std::size_t>(cfg.projective_trials);
        std::vector<std::vector<double>> masses(num_windows, std::vector<double>(T));
        std::vector<int> attempts(T, 1);
        const double total = std::pow(static_cast<double>(n), m);
        pool.for_each(T, [&](std::size_t t) {
            int used = 0;
            for (int attempt = 0; attempt < 16; ++attempt) {
                ++used;
                const SectionSystem system =
                    sample_section_system(space, law, cfg.seed, static_cast<int>(t), attempt);
                try {
                    const ProjectiveZeros zeros = zero_locus_cp(system, space);
                    if (m == 2 && zeros.total_multiplicity() != n * n) {
                        continue;  // dropped points: non-generic event, redraw
                    }
                    for (std::size_t w = 0; w < num_windows; ++w) {
                        double count = 0.0;
                        for (std::size_t i = 0; i < zeros.affine.points.size(); ++i) {
                            const Point& zp = zeros.affine.points[i];
                            const bool inside =
                                m == 1 ? cap_contains(caps[w], to_sphere(zp[0]))
                                       : window_contains(windows[w], zp);
                            if (inside) count += zeros.affine.multiplicities[i];
                        }
                        if (m == 1 && cap_contains(caps[w], {0.0, 0.0, 1.0})) {
                            for (int mult : zeros.infinity_mult) count += mult;
                        }
                        masses[w][t] = count / total;
                    }
                    attempts[t] = used;
                    return;
                } catch (const NonGenericSystemError&) {
                    continue;
                }
            }
            throw NonGenericSystemError(
                "global_equidist_experiment: persistent non-generic systems");
        });
        for (int a : attempts) nongeneric += a - 1;
        const double tol = m == 1 ? 0.02 : 0.05;
        for (std::size_t w = 0; w < num_windows; ++w) {
            const MeanSE ms = mean_se(masses[w]);
            CapRow row;
            row.degree = n;
            row.window_index = static_cast<int>(w);
            row.mean_mass = ms.mean;
            row.se = ms.se;
            row.target = m == 1 ? caps[w].target : windows[w].target;
            row.deviation = ms.mean - row.target;
            report.caps.push_back(row);
            audits = audits && std::abs(row.deviation) <= tol + 3.0 * ms.se;
        }
    }
    report.nongeneric_events = nongeneric;
    report.audits_pass = audits;
    return report;
}

}  // namespace plurizero
