#include "plurizero/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace plurizero {

double QuadratureRule::total_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

QuadratureRule circle_rule(std::size_t num_nodes, Complex center, double radius) {
    if (num_nodes == 0) throw std::invalid_argument("circle_rule: empty rule");
    QuadratureRule rule;
    rule.nodes.reserve(num_nodes);
    rule.weights.assign(num_nodes, 1.0 / static_cast<double>(num_nodes));
    for (std::size_t k = 0; k < num_nodes; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / num_nodes;
        rule.nodes.push_back({center + radius * Complex{std::cos(t), std::sin(t)}});
    }
    return rule;
}

QuadratureRule chebyshev_rule(std::size_t num_nodes) {
    if (num_nodes == 0) throw std::invalid_argument("chebyshev_rule: empty rule");
    QuadratureRule rule;
    rule.nodes.reserve(num_nodes);
    rule.weights.assign(num_nodes, 1.0 / static_cast<double>(num_nodes));
    for (std::size_t k = 0; k < num_nodes; ++k) {
        const double x = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * num_nodes));
        rule.nodes.push_back({Complex{x, 0.0}});
    }
    return rule;
}

void gauss_legendre(std::size_t n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: empty rule");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = mid - half * nodes[i];
        weights[i] *= half;
    }
}

QuadratureRule torus_rule(std::size_t nodes_per_axis) {
    const std::size_t n = nodes_per_axis;
    if (n == 0) throw std::invalid_argument("torus_rule: empty rule");
    QuadratureRule rule;
    rule.nodes.reserve(n * n);
    rule.weights.assign(n * n, 1.0 / static_cast<double>(n * n));
    for (std::size_t i = 0; i < n; ++i) {
        const double t1 = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        const Complex z1{std::cos(t1), std::sin(t1)};
        for (std::size_t j = 0; j < n; ++j) {
            const double t2 = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
            rule.nodes.push_back({z1, Complex{std::cos(t2), std::sin(t2)}});
        }
    }
    return rule;
}

QuadratureRule sphere3_rule(std::size_t u_nodes, std::size_t angle_nodes) {
    std::vector<double> un, uw;
    gauss_legendre(u_nodes, 0.0, 1.0, un, uw);
    QuadratureRule rule;
    rule.nodes.reserve(u_nodes * angle_nodes * angle_nodes);
    rule.weights.reserve(u_nodes * angle_nodes * angle_nodes);
    const double aw = 1.0 / static_cast<double>(angle_nodes);
    for (std::size_t i = 0; i < u_nodes; ++i) {
        const double r1 = std::sqrt(un[i]);
        const double r2 = std::sqrt(1.0 - un[i]);
        for (std::size_t a = 0; a < angle_nodes; ++a) {
            const double t1 = 2.0 * std::numbers::pi * static_cast<double>(a) / angle_nodes;
            for (std::size_t b = 0; b < angle_nodes; ++b) {
                const double t2 = 2.0 * std::numbers::pi * static_cast<double>(b) / angle_nodes;
                rule.nodes.push_back({r1 * Complex{std::cos(t1), std::sin(t1)},
                                      r2 * Complex{std::cos(t2), std::sin(t2)}});
                rule.weights.push_back(uw[i] * aw * aw);
            }
        }
    }
    return rule;
}

QuadratureRule disk_area_rule(std::size_t radial_nodes, std::size_t angle_nodes) {
    // Normalized area measure dA / pi: Gauss-Legendre in u = r^2, trapezoid in angle.
    std::vector<double> un, uw;
    gauss_legendre(radial_nodes, 0.0, 1.0, un, uw);
    QuadratureRule rule;
    const double aw = 1.0 / static_cast<double>(angle_nodes);
    for (std::size_t i = 0; i < radial_nodes; ++i) {
        const double r = std::sqrt(un[i]);
        for (std::size_t a = 0; a < angle_nodes; ++a) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(a) / angle_nodes;
            rule.nodes.push_back({r * Complex{std::cos(t), std::sin(t)}});
            rule.weights.push_back(uw[i] * aw);
        }
    }
    return rule;
}

namespace {

struct GslWorkspace {
    gsl_integration_workspace* ws;
    explicit GslWorkspace(std::size_t n) : ws(gsl_integration_workspace_alloc(n)) {}
    ~GslWorkspace() { gsl_integration_workspace_free(ws); }
};

double call_target(double x, void* params) {
    auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

struct GslErrorSilencer {
    gsl_error_handler_t* old;
    GslErrorSilencer() : old(gsl_set_error_handler_off()) {}
    ~GslErrorSilencer() { gsl_set_error_handler(old); }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
    GslErrorSilencer silence;
    GslWorkspace ws(4096);
    gsl_function gf;
    gf.function = &call_target;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, error = 0.0;
    int status = gsl_integration_qags(&gf, a, b, abs_tol, rel_tol, 4096, ws.ws, &result, &error);
    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        throw std::runtime_error("integrate: GSL QAGS failed with status " +
                                 std::string(gsl_strerror(status)));
    }
    return result;
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol, double rel_tol) {
    GslErrorSilencer silence;
    GslWorkspace ws(4096);
    gsl_function gf;
    gf.function = &call_target;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, error = 0.0;
    int status = gsl_integration_qagiu(&gf, a, abs_tol, rel_tol, 4096, ws.ws, &result, &error);
    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        throw std::runtime_error("integrate_to_inf: GSL QAGIU failed with status " +
                                 std::string(gsl_strerror(status)));
    }
    return result;
}

}  // namespace plurizero
