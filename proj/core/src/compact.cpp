#include "plurizero/compact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plurizero {

std::string to_string(CompactKind kind) {
    switch (kind) {
        case CompactKind::unit_disk: return "unit_disk";
        case CompactKind::circle: return "circle";
        case CompactKind::interval: return "interval";
        case CompactKind::polydisk: return "polydisk";
        case CompactKind::unit_ball: return "unit_ball";
        case CompactKind::custom_grid: return "custom_grid";
    }
    return "?";
}

struct WeightedCompact::Data {
    CompactKind kind;
    int num_vars;
    Weight weight;
    std::size_t boundary_nodes;
    std::size_t u_nodes = 0;  // unit_ball only
    QuadratureRule boundary;
    QuadratureRule area;
};

namespace {

std::vector<Point> interval_sup_points(std::size_t n) {
    // Chebyshev extrema: clustered at the endpoints, includes +-1.
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = std::cos(std::numbers::pi * static_cast<double>(k) / (n - 1));
        pts.push_back({Complex{x, 0.0}});
    }
    return pts;
}

void check_rule(const QuadratureRule& rule, const char* what) {
    if (rule.nodes.empty()) throw std::invalid_argument(std::string(what) + ": empty grid");
    if (rule.nodes.size() != rule.weights.size())
        throw std::invalid_argument(std::string(what) + ": nodes/weights length mismatch");
    for (double w : rule.weights) {
        if (!(w > 0.0)) throw std::invalid_argument(std::string(what) + ": weights must be positive");
    }
}

}  // namespace

WeightedCompact WeightedCompact::unit_disk(Weight q, std::size_t boundary_nodes) {
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::unit_disk;
    d->num_vars = 1;
    d->weight = std::move(q);
    d->boundary_nodes = boundary_nodes;
    d->boundary = circle_rule(boundary_nodes);
    d->area = disk_area_rule(32, 64);
    return WeightedCompact(std::move(d));
}

WeightedCompact WeightedCompact::circle(Weight q, std::size_t boundary_nodes) {
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::circle;
    d->num_vars = 1;
    d->weight = std::move(q);
    d->boundary_nodes = boundary_nodes;
    d->boundary = circle_rule(boundary_nodes);
    d->area = d->boundary;  // measures on the circle live on the circle
    return WeightedCompact(std::move(d));
}

WeightedCompact WeightedCompact::interval(Weight q, std::size_t boundary_nodes) {
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::interval;
    d->num_vars = 1;
    d->weight = std::move(q);
    d->boundary_nodes = boundary_nodes;
    d->boundary = chebyshev_rule(boundary_nodes);
    d->area = d->boundary;
    return WeightedCompact(std::move(d));
}

WeightedCompact WeightedCompact::polydisk(Weight q, std::size_t nodes_per_axis) {
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::polydisk;
    d->num_vars = 2;
    d->weight = std::move(q);
    d->boundary_nodes = nodes_per_axis;
    d->boundary = torus_rule(nodes_per_axis);
    d->area = d->boundary;
    return WeightedCompact(std::move(d));
}

WeightedCompact WeightedCompact::unit_ball(Weight q, std::size_t u_nodes,
                                           std::size_t angle_nodes) {
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::unit_ball;
    d->num_vars = 2;
    d->weight = std::move(q);
    d->boundary_nodes = angle_nodes;
    d->u_nodes = u_nodes;
    d->boundary = sphere3_rule(u_nodes, angle_nodes);
    d->area = d->boundary;
    return WeightedCompact(std::move(d));
}

WeightedCompact WeightedCompact::custom_grid(QuadratureRule boundary, QuadratureRule area,
                                             Weight q) {
    check_rule(boundary, "custom_grid boundary");
    check_rule(area, "custom_grid area");
    auto d = std::make_shared<Data>();
    d->kind = CompactKind::custom_grid;
    d->num_vars = static_cast<int>(boundary.nodes.front().size());
    d->weight = std::move(q);
    d->boundary_nodes = boundary.nodes.size();
    d->boundary = std::move(boundary);
    d->area = std::move(area);
    return WeightedCompact(std::move(d));
}

CompactKind WeightedCompact::kind() const { return data_->kind; }
int WeightedCompact::num_vars() const { return data_->num_vars; }
const Weight& WeightedCompact::weight() const { return data_->weight; }
bool WeightedCompact::unweighted() const { return data_->weight.is_zero(); }
const QuadratureRule& WeightedCompact::boundary_grid() const { return data_->boundary; }
const QuadratureRule& WeightedCompact::area_grid() const { return data_->area; }

QuadratureRule WeightedCompact::quadrature_for_degree(int n) const {
    if (n < 0) throw std::invalid_argument("quadrature_for_degree: negative degree");
    const std::size_t need = static_cast<std::size_t>(4 * n + 4);
    switch (data_->kind) {
        case CompactKind::unit_disk:
        case CompactKind::circle:
            return circle_rule(std::max(data_->boundary_nodes, need));
        case CompactKind::interval:
            return chebyshev_rule(std::max<std::size_t>(128, static_cast<std::size_t>(2 * n + 2)));
        case CompactKind::polydisk:
            return torus_rule(std::max(data_->boundary_nodes,
                                       static_cast<std::size_t>(2 * n + 2)));
        case CompactKind::unit_ball:
            return sphere3_rule(std::max(data_->u_nodes, static_cast<std::size_t>(n + 1)),
                                std::max(data_->boundary_nodes,
                                         static_cast<std::size_t>(2 * n + 2)));
        case CompactKind::custom_grid:
            return data_->boundary;
    }
    throw std::logic_error("quadrature_for_degree: unknown kind");
}

std::vector<Point> WeightedCompact::sup_points(int refine) const {
    if (refine < 1) throw std::invalid_argument("sup_points: refine must be >= 1");
    const std::size_t r = static_cast<std::size_t>(refine);
    switch (data_->kind) {
        case CompactKind::unit_disk: {
            // Boundary circle plus interior rings; the interior matters only
            // for nonzero weights (maximum principle covers q = 0).
            std::vector<Point> pts = circle_rule(data_->boundary_nodes * r).nodes;
            if (!data_->weight.is_zero()) {
                auto interior = disk_area_rule(16 * r, 32 * r).nodes;
                pts.insert(pts.end(), interior.begin(), interior.end());
                pts.push_back({Complex{0.0, 0.0}});
            }
            return pts;
        }
        case CompactKind::circle:
            return circle_rule(data_->boundary_nodes * r).nodes;
        case CompactKind::interval:
            return interval_sup_points(data_->boundary_nodes * r);
        case CompactKind::polydisk:
            return torus_rule(data_->boundary_nodes * r).nodes;
        case CompactKind::unit_ball: {
            std::vector<Point> pts = sphere3_rule(data_->u_nodes * r, data_->boundary_nodes * r).nodes;
            if (!data_->weight.is_zero()) {
                // radial shells of the sphere grid
                auto shell = sphere3_rule(std::max<std::size_t>(4, data_->u_nodes * r / 4),
                                          std::max<std::size_t>(8, data_->boundary_nodes * r / 2))
                                 .nodes;
                for (double rho : {0.25, 0.5, 0.75}) {
                    for (Point p : shell) {
                        for (Complex& c : p) c *= rho;
                        pts.push_back(std::move(p));
                    }
                }
                pts.push_back({Complex{0.0, 0.0}, Complex{0.0, 0.0}});
            }
            return pts;
        }
        case CompactKind::custom_grid: {
            std::vector<Point> pts = data_->boundary.nodes;
            pts.insert(pts.end(), data_->area.nodes.begin(), data_->area.nodes.end());
            return pts;
        }
    }
    throw std::logic_error("sup_points: unknown kind");
}

double WeightedCompact::weighted_sup(const Polynomial& p, int n, int refine) const {
    if (p.num_vars() != data_->num_vars)
        throw std::invalid_argument("weighted_sup: polynomial arity mismatch");
    double best = 0.0;
    for (const Point& z : sup_points(refine)) {
        const double v = std::abs(p.eval(z)) * std::exp(-n * data_->weight(z));
        best = std::max(best, v);
    }
    return best;
}

}  // namespace plurizero
