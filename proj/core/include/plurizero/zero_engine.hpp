#ifndef PLURIZERO_ZERO_ENGINE_HPP
#define PLURIZERO_ZERO_ENGINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "plurizero/polynomial.hpp"
#include "plurizero/test_form.hpp"

namespace plurizero {

/// Zeros (or simultaneous zeros) of one sampled polynomial system.
struct ZeroSample {
    std::vector<Point> points;
    std::vector<int> multiplicities;
    int codim = 1;
    int source_degree = 0;
    /// max over reported points of |f| relative to the coefficient scale
    /// sum_k |c_k| |z|^k at the point (backward-error ratio).
    double residual = 0.0;

    int total_multiplicity() const;
};

struct RootOptions {
    int max_sweeps = 200;
    int polish_steps = 3;
    double trim_rel_tol = 1e-14;     // leading-coefficient trim threshold
    double cluster_rel_tol = 1e-8;   // multiplicity clustering floor
};

/// All n roots of a univariate polynomial by Aberth-Ehrlich simultaneous
/// iteration with Newton polishing; companion-matrix eigenvalues as fallback.
/// Multiplicities by clustering. Throws RootFindingError if both paths fail.
ZeroSample roots_univariate(const Polynomial& p, const RootOptions& options = {});

/// Same, on dense coefficients c[0] + c[1] z + ... (hot path for samplers).
ZeroSample roots_from_dense(const std::vector<Complex>& coeffs, const RootOptions& options = {});

/// Simultaneous zeros of a bivariate pair by Sylvester-resultant elimination
/// in y (evaluate at roots-of-unity x nodes, interpolate by inverse DFT),
/// univariate x-roots, y recovery by root matching, and 2x2 Newton polish.
/// Throws NonGenericSystemError when the resultant vanishes identically.
ZeroSample solve_system_2d(const Polynomial& p, const Polynomial& q,
                           const RootOptions& options = {});

enum class PairingMethod { root_sum, poincare_lelong };

struct CurrentPairing {
    double value = 0.0;
    PairingMethod method = PairingMethod::root_sum;
    bool degree_normalized = true;  // 1/n^k applied
    double refinement_delta = 0.0;  // quadrature methods only
    bool warning = false;
};

/// <[Z-hat], phi> = n^{-k} sum multiplicity * phi(point). Requires codim = m
/// (point masses); throws DimensionMismatchError otherwise.
CurrentPairing pairing_root_sum(const ZeroSample& zeros, const TestForm& phi);

/// Poincare-Lelong route: (1/n) * integral of log|f| against dd^c(phi) on the
/// form's jittered grid. spacing <= 0 selects the form's default.
CurrentPairing pairing_poincare_lelong(const Polynomial& f, const TestForm& phi, int degree,
                                       double spacing = 0.0);

/// CSV export: re/im per coordinate plus multiplicity, one point per row.
void zero_sample_to_csv(const ZeroSample& zeros, std::ostream& out);

}  // namespace plurizero

#endif
