#include "plurizero/zero_engine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "plurizero/errors.hpp"
#include "plurizero/stats.hpp"

namespace plurizero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Horner value, derivative, and the running coefficient scale
/// s = sum |c_k| |z|^k, all carried as mantissa * 2^exponent with one shared
/// exponent. Keeps the iteration overflow-proof for coefficient ranges
/// spanning hundreds of orders of magnitude (Fubini-Study sections at large n
/// evaluated near their outermost roots).
struct ScaledEval {
    Complex p{0.0, 0.0};
    Complex dp{0.0, 0.0};
    double s = 0.0;
    int exponent = 0;

    double backward_tol(double factor) const { return factor * kEps * s; }
    bool value_below(double tol) const { return std::abs(p) <= tol; }
};

ScaledEval eval_scaled(const std::vector<Complex>& c, Complex z) {
    constexpr double kBig = 0x1.0p512;
    constexpr double kShrink = 0x1.0p-512;
    const double az = std::abs(z);
    ScaledEval out;
    const int n = static_cast<int>(c.size()) - 1;
    out.p = c[n];
    out.s = std::abs(c[n]);
    double addend_scale = 1.0;  // 2^{-exponent}, 0 once the exponent is huge
    for (int k = n - 1; k >= 0; --k) {
        out.dp = out.dp * z + out.p;
        out.p = out.p * z + c[k] * addend_scale;
        out.s = out.s * az + std::abs(c[k]) * addend_scale;
        if (out.s > kBig || std::abs(out.dp) > kBig) {
            out.p *= kShrink;
            out.dp *= kShrink;
            out.s *= kShrink;
            out.exponent += 512;
            addend_scale *= kShrink;  // gracefully flushes to 0 when negligible
        }
    }
    return out;
}

/// Initial guesses from the upper convex hull of (k, log|c_k|): one annulus of
/// starting points per hull edge. Handles coefficient ranges spanning hundreds
/// of orders of magnitude.
std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<int> ks;
    std::vector<double> logs;
    for (int k = 0; k <= n; ++k) {
        if (c[k] != Complex{0.0, 0.0}) {
            ks.push_back(k);
            logs.push_back(std::log(std::abs(c[k])));
        }
    }
    // upper hull in (k, log|c_k|)
    std::vector<int> hull;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            const double cross = (ks[b] - ks[a]) * (logs[i] - logs[a]) -
                                 (ks[i] - ks[a]) * (logs[b] - logs[a]);
            if (cross >= 0.0) hull.pop_back();
            else break;
        }
        hull.push_back(static_cast<int>(i));
    }
    std::vector<Complex> guesses;
    guesses.reserve(n);
    int placed = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const int k1 = ks[hull[e]], k2 = ks[hull[e + 1]];
        const double slope = (logs[hull[e]] - logs[hull[e + 1]]) / (k2 - k1);
        const double rho = std::exp(std::clamp(slope, -230.0, 230.0));
        const int count = k2 - k1;
        for (int j = 0; j < count; ++j) {
            const double angle = 2.0 * std::numbers::pi * (placed + 0.5) / n + 0.376 +
                                 0.5 * static_cast<double>(e);
            guesses.push_back(rho * Complex{std::cos(angle), std::sin(angle)});
            ++placed;
        }
    }
    while (placed < n) {  // degenerate hull (single coefficient)
        const double angle = 2.0 * std::numbers::pi * (placed + 0.5) / n + 0.376;
        guesses.push_back(Complex{std::cos(angle), std::sin(angle)});
        ++placed;
    }
    return guesses;
}

/// Aberth-Ehrlich simultaneous iteration. Returns true when every root met the
/// Adams-style stopping criterion |p(z)| <= 20 eps * sum |c_k||z|^k.
bool aberth_iterate(const std::vector<Complex>& c, std::vector<Complex>& z, int max_sweeps) {
    const int n = static_cast<int>(z.size());
    std::vector<bool> done(n, false);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        int remaining = 0;
        for (int j = 0; j < n; ++j) {
            if (done[j]) continue;
            const ScaledEval ev = eval_scaled(c, z[j]);
            if (!std::isfinite(ev.p.real()) || !std::isfinite(ev.p.imag())) {
                z[j] *= 0.5;  // retreat toward the origin
                ++remaining;
                continue;
            }
            if (ev.value_below(ev.backward_tol(20.0))) {
                done[j] = true;
                continue;
            }
            Complex newton = (ev.dp == Complex{0.0, 0.0}) ? Complex{1e-8, 1e-8} : ev.p / ev.dp;
            Complex repulsion = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                const Complex diff = z[j] - z[k];
                if (diff == Complex{0.0, 0.0}) continue;
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            Complex w = (denom == Complex{0.0, 0.0}) ? newton : newton / denom;
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = newton;
            z[j] -= w;
            ++remaining;
        }
        if (remaining == 0) return true;
    }
    // final check
    for (int j = 0; j < n; ++j) {
        const ScaledEval ev = eval_scaled(c, z[j]);
        if (!ev.value_below(ev.backward_tol(1e4))) return false;
    }
    return true;
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw RootFindingError("companion-matrix eigenvalue fallback failed to converge");
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

void newton_polish(const std::vector<Complex>& c, std::vector<Complex>& roots, int steps) {
    for (Complex& z : roots) {
        for (int s = 0; s < steps; ++s) {
            const ScaledEval ev = eval_scaled(c, z);
            if (ev.dp == Complex{0.0, 0.0}) break;
            const Complex step = ev.p / ev.dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            if (std::abs(step) > 0.1 * (1.0 + std::abs(z))) break;  // reject wild steps
            z -= step;
        }
    }
}

/// Greedy clustering at tol * max(1, |z|); returns representative + size.
void cluster_points(const std::vector<Complex>& roots, double tol,
                    std::vector<Complex>& centers, std::vector<int>& counts) {
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            const double scale = std::max(1.0, std::abs(roots[i]));
            if (std::abs(roots[j] - roots[i]) <= tol * scale) {
                sum += roots[j];
                count += 1;
                used[j] = true;
            }
        }
        centers.push_back(sum / static_cast<double>(count));
        counts.push_back(count);
    }
}

}  // namespace

int ZeroSample::total_multiplicity() const {
    int s = 0;
    for (int m : multiplicities) s += m;
    return s;
}

ZeroSample roots_from_dense(const std::vector<Complex>& coeffs, const RootOptions& options) {
    // trim leading coefficients below the relative threshold
    double maxc = 0.0;
    for (const Complex& x : coeffs) maxc = std::max(maxc, std::abs(x));
    if (maxc == 0.0) throw RootFindingError("roots_univariate: zero polynomial");
    int top = static_cast<int>(coeffs.size()) - 1;
    while (top > 0 && std::abs(coeffs[top]) <= options.trim_rel_tol * maxc) --top;
    if (top < 1)
        throw RootFindingError("roots_univariate: degree < 1 after coefficient trimming");
    std::vector<Complex> c(coeffs.begin(), coeffs.begin() + top + 1);

    // strip exact zero roots
    int zero_mult = 0;
    while (c.size() > 1 && c.front() == Complex{0.0, 0.0}) {
        c.erase(c.begin());
        ++zero_mult;
    }

    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Complex> roots;
    if (n >= 1) {
        roots = initial_guesses(c);
        if (!aberth_iterate(c, roots, options.max_sweeps)) {
            roots = companion_eigenvalues(c);
            newton_polish(c, roots, 8);
            for (const Complex& z : roots) {
                const ScaledEval ev = eval_scaled(c, z);
                if (!ev.value_below(ev.backward_tol(1e6)))
                    throw RootFindingError(
                        "roots_univariate: neither Aberth-Ehrlich nor the companion fallback "
                        "converged");
            }
        }
        newton_polish(c, roots, options.polish_steps);
    }

    ZeroSample sample;
    sample.codim = 1;
    sample.source_degree = top;
    const double cluster_tol =
        std::max(options.cluster_rel_tol, 10.0 * std::sqrt(static_cast<double>(top) * kEps));
    std::vector<Complex> centers;
    std::vector<int> counts;
    cluster_points(roots, cluster_tol, centers, counts);
    if (zero_mult > 0) {
        centers.push_back(0.0);
        counts.push_back(zero_mult);
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        sample.points.push_back({centers[i]});
        sample.multiplicities.push_back(counts[i]);
        // backward-error ratio at the root's own modulus scale
        const ScaledEval ev = eval_scaled(c, centers[i]);
        if (ev.s > 0.0) residual = std::max(residual, std::abs(ev.p) / ev.s);
    }
    sample.residual = residual;
    return sample;
}

ZeroSample roots_univariate(const Polynomial& p, const RootOptions& options) {
    if (p.num_vars() != 1)
        throw DimensionMismatchError("roots_univariate: requires m = 1");
    if (p.degree() < 1)
        throw RootFindingError("roots_univariate: degree must be >= 1");
    return roots_from_dense(p.dense1(), options);
}

namespace {

/// coefficients of p(x0, y) as a dense polynomial in y
std::vector<Complex> y_slice(const Polynomial& p, Complex x0, int deg_y) {
    std::vector<Complex> out(deg_y + 1, Complex{0.0, 0.0});
    // Horner in x per y-power
    std::vector<std::vector<Complex>> by_y(deg_y + 1);
    int deg_x = 0;
    for (const auto& [idx, c] : p.coeffs()) deg_x = std::max(deg_x, idx.exponents[0]);
    for (auto& row : by_y) row.assign(deg_x + 1, Complex{0.0, 0.0});
    for (const auto& [idx, c] : p.coeffs()) by_y[idx.exponents[1]][idx.exponents[0]] = c;
    for (int ky = 0; ky <= deg_y; ++ky) {
        Complex acc = 0.0;
        for (int kx = deg_x; kx >= 0; --kx) acc = acc * x0 + by_y[ky][kx];
        out[ky] = acc;
    }
    return out;
}

int degree_in(const Polynomial& p, int var) {
    int d = 0;
    for (const auto& [idx, c] : p.coeffs()) d = std::max(d, idx.exponents[var]);
    return d;
}

/// Sylvester resultant of two dense univariate polynomials (in y), via LU.
Complex sylvester_det(const std::vector<Complex>& a, const std::vector<Complex>& b,
                      double& hadamard) {
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const int size = da + db;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) s(r, r + k) = a[da - k];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) s(db + r, r + k) = b[db - k];
    hadamard = 1.0;
    for (int r = 0; r < size; ++r) hadamard *= std::max(s.row(r).norm(), 1e-300);
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(s).determinant();
}

struct PolishResult {
    Point z;
    double residual;
};

PolishResult newton_polish_2d(const Polynomial& p, const Polynomial& q, Point z,
                              const Polynomial& px, const Polynomial& py, const Polynomial& qx,
                              const Polynomial& qy, double scale_p, double scale_q) {
    for (int iter = 0; iter < 40; ++iter) {
        const Complex fp = p.eval(z), fq = q.eval(z);
        if (std::abs(fp) <= 4.0 * kEps * scale_p && std::abs(fq) <= 4.0 * kEps * scale_q) break;
        const Complex a = px.eval(z), b = py.eval(z);
        const Complex c = qx.eval(z), d = qy.eval(z);
        const Complex det = a * d - b * c;
        if (det == Complex{0.0, 0.0}) break;
        const Complex dx = (fp * d - b * fq) / det;
        const Complex dy = (a * fq - fp * c) / det;
        if (!std::isfinite(dx.real()) || !std::isfinite(dy.real())) break;
        z[0] -= dx;
        z[1] -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(z[0]) + std::abs(z[1]))) break;
    }
    const double res = std::max(std::abs(p.eval(z)) / scale_p, std::abs(q.eval(z)) / scale_q);
    return {std::move(z), res};
}

}  // namespace

ZeroSample solve_system_2d(const Polynomial& p, const Polynomial& q, const RootOptions& options) {
    if (p.num_vars() != 2 || q.num_vars() != 2)
        throw DimensionMismatchError("solve_system_2d: requires m = 2");
    if (p.degree() < 1 || q.degree() < 1)
        throw NonGenericSystemError("solve_system_2d: degrees must be >= 1");
    const int dyp = degree_in(p, 1);
    const int dyq = degree_in(q, 1);
    if (dyp == 0 && dyq == 0)
        throw NonGenericSystemError(
            "solve_system_2d: both polynomials independent of y (positive-dimensional locus)");

    const Polynomial px = p.derivative(0), py = p.derivative(1);
    const Polynomial qx = q.derivative(0), qy = q.derivative(1);
    const double scale_p = std::max(p.coeff_norm1(), 1e-300);
    const double scale_q = std::max(q.coeff_norm1(), 1e-300);

    ZeroSample sample;
    sample.codim = 2;
    sample.source_degree = std::max(p.degree(), q.degree());

    std::vector<Complex> centers;  // x positions
    std::vector<int> counts;

    if (dyp == 0 || dyq == 0) {
        // one curve is a function of x alone: x roots come from it directly
        const Polynomial& xonly = dyp == 0 ? p : q;
        std::vector<Complex> cx(degree_in(xonly, 0) + 1, Complex{0.0, 0.0});
        for (const auto& [idx, c] : xonly.coeffs()) cx[idx.exponents[0]] = c;
        ZeroSample xr = roots_from_dense(cx, options);
        for (std::size_t i = 0; i < xr.points.size(); ++i) {
            centers.push_back(xr.points[i][0]);
            counts.push_back(xr.multiplicities[i]);
        }
    } else {
        // resultant degree bound (Bezout); evaluate-interpolate at roots of unity
        const int bound = p.degree() * q.degree();
        const int M = bound + 1;
        std::vector<Complex> values(M);
        double max_ratio = 0.0;
        for (int j = 0; j < M; ++j) {
            const double t = 2.0 * std::numbers::pi * j / M;
            const Complex xj{std::cos(t), std::sin(t)};
            double hadamard = 1.0;
            values[j] = sylvester_det(y_slice(p, xj, dyp), y_slice(q, xj, dyq), hadamard);
            max_ratio = std::max(max_ratio, std::abs(values[j]) / hadamard);
        }
        if (max_ratio < 1e-13)
            throw NonGenericSystemError(
                "solve_system_2d: resultant identically zero (positive-dimensional locus)");
        // inverse DFT for the monomial coefficients of Res_y(x)
        std::vector<Complex> res_coeffs(M);
        for (int k = 0; k < M; ++k) {
            Complex acc = 0.0;
            for (int j = 0; j < M; ++j) {
                const double t = -2.0 * std::numbers::pi * j * k / M;
                acc += values[j] * Complex{std::cos(t), std::sin(t)};
            }
            res_coeffs[k] = acc / static_cast<double>(M);
        }
        double maxc = 0.0;
        for (const Complex& c : res_coeffs) maxc = std::max(maxc, std::abs(c));
        for (Complex& c : res_coeffs) {
            if (std::abs(c) <= 1e-10 * maxc) c = 0.0;  // interpolation noise
        }
        ZeroSample xr = roots_from_dense(res_coeffs, options);
        for (std::size_t i = 0; i < xr.points.size(); ++i) {
            centers.push_back(xr.points[i][0]);
            counts.push_back(xr.multiplicities[i]);
        }
    }

    // recover y at each x by matching the y-roots of both slices
    double residual = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const Complex x0 = centers[i];
        const int mult_x = counts[i];
        std::vector<Complex> yp_roots, yq_roots;
        if (dyp >= 1) {
            try {
                ZeroSample r = roots_from_dense(y_slice(p, x0, dyp), options);
                for (std::size_t k = 0; k < r.points.size(); ++k)
                    for (int c = 0; c < r.multiplicities[k]; ++c) yp_roots.push_back(r.points[k][0]);
            } catch (const RootFindingError&) { /* slice degenerated; match on q alone */
            }
        }
        if (dyq >= 1) {
            try {
                ZeroSample r = roots_from_dense(y_slice(q, x0, dyq), options);
                for (std::size_t k = 0; k < r.points.size(); ++k)
                    for (int c = 0; c < r.multiplicities[k]; ++c) yq_roots.push_back(r.points[k][0]);
            } catch (const RootFindingError&) {
            }
        }
        std::vector<Complex> candidates;
        if (yp_roots.empty()) candidates = yq_roots;
        else if (yq_roots.empty()) candidates = yp_roots;
        else {
            for (double tol : {1e-5, 1e-3}) {
                for (const Complex& yp : yp_roots) {
                    for (const Complex& yq : yq_roots) {
                        if (std::abs(yp - yq) <= tol * std::max(1.0, std::abs(yp))) {
                            candidates.push_back(0.5 * (yp + yq));
                        }
                    }
                }
                if (!candidates.empty()) break;
            }
        }
        if (candidates.empty()) continue;  // spurious x root (interpolation noise)

        // polish and deduplicate
        std::vector<Complex> polished;
        for (const Complex& y0 : candidates) {
            PolishResult pr = newton_polish_2d(p, q, {x0, y0}, px, py, qx, qy, scale_p, scale_q);
            if (pr.residual > 1e-6) continue;
            polished.push_back(pr.z[1]);
            residual = std::max(residual, pr.residual);
        }
        if (polished.empty()) continue;
        const double ytol = std::max(options.cluster_rel_tol,
                                     10.0 * std::sqrt(static_cast<double>(sample.source_degree) * kEps));
        std::vector<Complex> ycenters;
        std::vector<int> ycounts;
        cluster_points(polished, 100.0 * ytol, ycenters, ycounts);
        // distribute the x multiplicity across the distinct y values
        const int k = static_cast<int>(ycenters.size());
        for (int j = 0; j < k; ++j) {
            int mult = mult_x / k;
            if (j < mult_x % k) mult += 1;
            if (mult == 0) mult = 1;
            sample.points.push_back({x0, ycenters[j]});
            sample.multiplicities.push_back(mult);
        }
    }
    sample.residual = residual;
    return sample;
}

CurrentPairing pairing_root_sum(const ZeroSample& zeros, const TestForm& phi) {
    if (zeros.codim != phi.num_vars())
        throw DimensionMismatchError(
            "pairing_root_sum: requires codim = m (point masses); use pairing_poincare_lelong");
    if (zeros.source_degree < 1)
        throw std::invalid_argument("pairing_root_sum: source degree must be >= 1");
    CurrentPairing out;
    out.method = PairingMethod::root_sum;
    const double norm = std::pow(static_cast<double>(zeros.source_degree), zeros.codim);
    std::vector<double> terms(zeros.points.size());
    for (std::size_t i = 0; i < zeros.points.size(); ++i)
        terms[i] = zeros.multiplicities[i] * phi.value(zeros.points[i]);
    out.value = pairwise_sum(terms) / norm;
    return out;
}

namespace {

double pl_quadrature(const Polynomial& f, const DdcGrid& grid, int degree, bool& saw_values) {
    std::vector<double> terms;
    terms.reserve(grid.nodes.size());
    saw_values = false;
    if (f.num_vars() == 1) {
        const std::vector<Complex> dense = f.dense1();
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            Complex acc = 0.0;
            const Complex z = grid.nodes[i][0];
            for (int k = static_cast<int>(dense.size()) - 1; k >= 0; --k) acc = acc * z + dense[k];
            const double a = std::abs(acc);
            if (a > 0.0) saw_values = true;
            else continue;  // jittered nodes should never sit on a root exactly
            terms.push_back(std::log(a) * grid.weights[i]);
        }
    } else {
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            const double a = std::abs(f.eval(grid.nodes[i]));
            if (a > 0.0) saw_values = true;
            else continue;
            terms.push_back(std::log(a) * grid.weights[i]);
        }
    }
    return pairwise_sum(terms) / degree;
}

}  // namespace

CurrentPairing pairing_poincare_lelong(const Polynomial& f, const TestForm& phi, int degree,
                                       double spacing) {
    if (degree < 1)
        throw std::invalid_argument("pairing_poincare_lelong: degree must be >= 1 (nonconstant f)");
    if (f.num_vars() != phi.num_vars())
        throw DimensionMismatchError("pairing_poincare_lelong: arity mismatch");
    if (f.is_zero())
        throw PointOnZeroSetError("pairing_poincare_lelong: f identically zero");
    const double h = spacing > 0.0 ? spacing : (phi.num_vars() == 1 ? phi.radius() / 256.0
                                                                    : phi.default_spacing());
    const DdcGrid fine = phi.make_ddc_grid(h, false);
    bool saw = false;
    CurrentPairing out;
    out.method = PairingMethod::poincare_lelong;
    out.value = pl_quadrature(f, fine, degree, saw);
    if (!saw)
        throw PointOnZeroSetError("pairing_poincare_lelong: f vanishes on the whole grid");
    const DdcGrid coarse = phi.make_ddc_grid(2.0 * h, false);
    bool saw2 = false;
    const double coarse_value = pl_quadrature(f, coarse, degree, saw2);
    out.refinement_delta = std::abs(out.value - coarse_value);
    out.warning = out.refinement_delta > 1e-4;
    return out;
}

void zero_sample_to_csv(const ZeroSample& zeros, std::ostream& out) {
    const int m = zeros.points.empty() ? 1 : static_cast<int>(zeros.points.front().size());
    for (int v = 1; v <= m; ++v) out << "re" << v << ",im" << v << ",";
    out << "multiplicity\n";
    out.precision(17);
    for (std::size_t i = 0; i < zeros.points.size(); ++i) {
        for (const Complex& c : zeros.points[i]) out << c.real() << "," << c.imag() << ",";
        out << zeros.multiplicities[i] << "\n";
    }
}

}  // namespace plurizero
