#ifndef PLURIZERO_TEST_FORM_HPP
#define PLURIZERO_TEST_FORM_HPP

#include <memory>
#include <string>
#include <vector>

#include "plurizero/extremal.hpp"
#include "plurizero/polynomial.hpp"

namespace plurizero {

enum class BumpProfile { smooth_bump, polynomial_bump };

std::string to_string(BumpProfile profile);

/// Discretization of dd^c(phi): jittered lattice nodes inside the support with
/// weights ~ (1/2pi) Laplacian(phi) h^{2m} (full 4D Laplacian when m = 2, so
/// the pairing target is the test (m-1, m-1)-form phi wedge the standard
/// Kaehler form).
struct DdcGrid {
    std::vector<Point> nodes;
    std::vector<double> weights;
    double spacing = 0.0;

    double total() const;  // ~ 0: dd^c of a compactly supported form is exact
};

/// Radial bump test form: support in the ball |z - center| < radius.
/// smooth_bump: exp(1 - 1/(1 - t^2)); polynomial_bump: (1 - t^2)^4, t = |z-c|/r.
class TestForm {
  public:
    TestForm(Point center, double radius, BumpProfile profile = BumpProfile::smooth_bump,
             double amplitude = 1.0);

    int num_vars() const;
    const Point& center() const;
    double radius() const;
    BumpProfile profile() const;

    double amplitude() const;

    double value(const Point& z) const;
    /// (1/2pi) * (full real Laplacian of phi) at z, in closed form.
    double ddc_density(const Point& z) const;

    /// Default-resolution dd^c grid with analytic densities (cached).
    const DdcGrid& ddc_grid() const;
    /// Grid at chosen spacing; use_stencil replaces the analytic Laplacian by
    /// the 5-point (m=1) / 9-point (m=2) finite-difference stencil.
    DdcGrid make_ddc_grid(double spacing, bool use_stencil) const;

    /// Cached c_phi: grid sup of |(1/2pi) Laplacian(phi)| times the support
    /// volume. Dominates the total variation of dd^c(phi).
    double c_phi() const;

    double default_spacing() const;

  private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

double c_phi_norm(const TestForm& phi);

struct QuadPairing {
    double value = 0.0;
    double refinement_delta = 0.0;  // |value - coarse(2h) value|
    bool warning = false;           // refinement delta above tolerance
};

/// <dd^c V, phi> = integral of V against dd^c(phi), by quadrature on the
/// form's grid.
double equilibrium_pairing(const ExtremalFunction& V, const TestForm& phi);
QuadPairing equilibrium_pairing_checked(const ExtremalFunction& V, const TestForm& phi,
                                        double warn_tol = 1e-4);

}  // namespace plurizero

#endif
