#ifndef PLURIZERO_COMPACT_HPP
#define PLURIZERO_COMPACT_HPP

#include <memory>
#include <string>
#include <vector>

#include "plurizero/quadrature.hpp"
#include "plurizero/weight_expr.hpp"

namespace plurizero {

enum class CompactKind { unit_disk, circle, interval, polydisk, unit_ball, custom_grid };

std::string to_string(CompactKind kind);

/// A compact K subset of C^m together with a continuous weight q, carried as
/// grid/quadrature discretizations. Grids are built once at construction and
/// immutable afterwards; copies share them.
class WeightedCompact {
  public:
    static WeightedCompact unit_disk(Weight q = Weight(), std::size_t boundary_nodes = 512);
    static WeightedCompact circle(Weight q = Weight(), std::size_t boundary_nodes = 512);
    static WeightedCompact interval(Weight q = Weight(), std::size_t boundary_nodes = 512);
    static WeightedCompact polydisk(Weight q = Weight(), std::size_t nodes_per_axis = 64);
    static WeightedCompact unit_ball(Weight q = Weight(), std::size_t u_nodes = 24,
                                     std::size_t angle_nodes = 24);
    static WeightedCompact custom_grid(QuadratureRule boundary, QuadratureRule area,
                                       Weight q = Weight());

    CompactKind kind() const;
    int num_vars() const;
    const Weight& weight() const;
    bool unweighted() const;

    /// Equilibrium-type boundary measure discretization (probability mass).
    const QuadratureRule& boundary_grid() const;
    /// Interior measure discretization where applicable (disk area, etc.).
    const QuadratureRule& area_grid() const;

    /// Quadrature adequate for L2 orthonormalization at degree n: exact (or
    /// near-exact) for products p conj(q) with deg p, deg q <= n.
    QuadratureRule quadrature_for_degree(int n) const;

    /// Points used to estimate sup norms over K; refine = 2 doubles resolution.
    std::vector<Point> sup_points(int refine = 1) const;

    /// Estimated sup over K of |p(z)| e^{-n q(z)}.
    double weighted_sup(const Polynomial& p, int n, int refine = 1) const;

  private:
    struct Data;
    std::shared_ptr<const Data> data_;
    explicit WeightedCompact(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
};

}  // namespace plurizero

#endif
