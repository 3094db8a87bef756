#ifndef PLURIZERO_QUADRATURE_HPP
#define PLURIZERO_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "plurizero/polynomial.hpp"

namespace plurizero {

/// Weighted point set on (a discretization of) a compact set in C^m.
struct QuadratureRule {
    std::vector<Point> nodes;
    std::vector<double> weights;  // positive, summing to the measure's mass

    std::size_t size() const { return nodes.size(); }
    double total_mass() const;
};

/// Trapezoid rule on the circle |z - center| = radius with the normalized
/// arclength measure (mass 1). Exact for trigonometric degree < num_nodes.
QuadratureRule circle_rule(std::size_t num_nodes, Complex center = 0.0, double radius = 1.0);

/// Gauss-Chebyshev rule on [-1, 1] for the normalized arcsine measure
/// dx / (pi sqrt(1 - x^2)); mass 1, exact for polynomial degree < 2 num_nodes.
QuadratureRule chebyshev_rule(std::size_t num_nodes);

/// Gauss-Legendre nodes/weights on [a, b] (weights integrate dx).
void gauss_legendre(std::size_t n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights);

/// Product trapezoid rule on the torus |z1| = |z2| = 1, normalized mass 1.
QuadratureRule torus_rule(std::size_t nodes_per_axis);

/// Normalized surface measure of the unit sphere S^3 in C^2, via the exact
/// product representation z = (sqrt(u) e^{i t1}, sqrt(1-u) e^{i t2}) with u
/// uniform on [0,1]: Gauss-Legendre in u, trapezoid in each angle.
QuadratureRule sphere3_rule(std::size_t u_nodes, std::size_t angle_nodes);

/// Polar rule for the normalized area measure of the unit disk (mass 1).
QuadratureRule disk_area_rule(std::size_t radial_nodes, std::size_t angle_nodes);

/// Adaptive 1D integration of f over [a, b] (GSL QAGS; handles integrable
/// endpoint singularities). Throws on failure to converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);

/// Adaptive integration over [a, infinity).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace plurizero

#endif
