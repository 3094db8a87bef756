#ifndef PLURIZERO_EXTREMAL_HPP
#define PLURIZERO_EXTREMAL_HPP

#include <memory>

#include "plurizero/basis.hpp"
#include "plurizero/compact.hpp"

namespace plurizero {

/// Closed-form weighted extremal function V_{K,0} for the canonical compacts:
/// log+|z| (disk, circle), log|z + sqrt(z^2-1)| with the branch >= 0
/// (interval), max_j log+|z_j| (polydisk), log+||z|| (ball).
/// Throws NoClosedFormError for custom kinds or nonzero weights.
double extremal_analytic(const WeightedCompact& kq, const Point& z);

/// Bergman growth proxy (1/2n) log Gamma_n(z). The approximation error decays
/// like (log d_n) / (2n) away from the boundary of K for admissible bases.
/// Throws DegeneratePointError when Gamma_n(z) = 0.
double extremal_numeric(const WeightedCompact& kq, int degree, const BasisFamily& basis,
                        const Point& z);

/// Evaluable extremal function: analytic closed form, or numeric via a basis.
class ExtremalFunction {
  public:
    static ExtremalFunction analytic(const WeightedCompact& kq);
    static ExtremalFunction bergman_numeric(const WeightedCompact& kq, int degree,
                                            BasisFamily basis);

    double operator()(const Point& z) const;
    bool is_analytic() const { return source_analytic_; }
    const WeightedCompact& compact() const { return kq_; }
    int numeric_degree() const { return degree_; }

  private:
    ExtremalFunction(WeightedCompact kq, bool analytic_src, int degree, BasisFamily basis)
        : kq_(std::move(kq)), source_analytic_(analytic_src), degree_(degree),
          basis_(std::make_shared<BasisFamily>(std::move(basis))) {}

    WeightedCompact kq_;
    bool source_analytic_;
    int degree_ = 0;
    std::shared_ptr<const BasisFamily> basis_;
};

}  // namespace plurizero

#endif
