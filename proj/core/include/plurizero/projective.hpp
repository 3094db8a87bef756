#ifndef PLURIZERO_PROJECTIVE_HPP
#define PLURIZERO_PROJECTIVE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "plurizero/ensembles.hpp"
#include "plurizero/experiments.hpp"
#include "plurizero/zero_engine.hpp"

namespace plurizero {

/// Degree-n section space of the hyperplane-bundle power over CP^1 or CP^2
/// with the Fubini-Study metric. The affine basis carries sqrt(multinomial)
/// coefficients, so the metric-weighted kernel sum is exactly 1 on the
/// manifold. Member coefficients are also kept in log form for overflow-free
/// evaluation at large n.
struct SectionSpace {
    int m = 1;  // complex dimension of the base
    int n = 0;  // tensor power / degree
    std::vector<MultiIndex> indices;   // grlex order, |alpha| <= n
    std::vector<double> log_coeffs;    // log sqrt(n! / (alpha_0! ... alpha_m!))
    std::size_t dimension() const { return indices.size(); }

    /// Affine basis polynomials (coefficients exp(log_coeffs)).
    BasisFamily affine_basis() const;
};

SectionSpace make_section_space(int m, int n);

/// ||s(z)||_{h_n} = |p_s(z)| (1 + ||z||^2)^{-n/2}, evaluated term-by-term in
/// log scale (stable for any n and |z|).
double fs_section_norm(const CoefficientVector& coeffs, const SectionSpace& space,
                       const Point& z);

/// On the second chart: the same section at the inverted point, for the
/// chart-overlap consistency check. m = 1 only: u = 1/z.
double fs_section_norm_chart2(const CoefficientVector& coeffs, const SectionSpace& space,
                              Complex u);

/// Gamma_n(z) = sum_j ||s_j(z)||^2 over the FS-orthonormal family (= 1 up to
/// rounding; the residual from constancy is the diagnostic of interest).
double bergman_gamma_sections(const SectionSpace& space, const Point& z);

/// k independent coefficient draws (disjoint RNG streams per section).
struct SectionSystem {
    int codim = 1;
    std::vector<CoefficientVector> sections;
};

SectionSystem sample_section_system(const SectionSpace& space, const CoefficientLaw& law,
                                    std::uint64_t seed, int trial, int attempt = 0);

/// Simultaneous zeros on CP^m for the point case k = m, split into the affine
/// chart and points at infinity (two-chart protocol).
struct ProjectiveZeros {
    ZeroSample affine;
    /// points on the hyperplane at infinity; for m=1 the single point is
    /// represented by an empty coordinate list, for m=2 by [w1 : w2].
    std::vector<Point> infinity;
    std::vector<int> infinity_mult;
    int total_multiplicity() const;
};

ProjectiveZeros zero_locus_cp(const SectionSystem& system, const SectionSpace& space);

/// Stereographic push of an affine chart point to the unit sphere; the point
/// at infinity maps to (0, 0, 1).
std::array<double, 3> to_sphere(Complex z);

struct SphereCap {
    std::array<double, 3> axis;
    double cos_angle = 0.5;
    double target = 0.25;  // normalized FS (round sphere) area
};

/// The fixed separating dictionary: 16 caps at 4 latitudes x 4 longitudes,
/// angular radius 60 degrees.
std::vector<SphereCap> standard_caps();

bool cap_contains(const SphereCap& cap, const std::array<double, 3>& x);

/// Radial product window on the affine chart of CP^2.
struct Cp2Window {
    double r1_lo = 0.0, r1_hi = 0.0;  // |z1| band (hi <= 0 means unbounded)
    double r2_lo = 0.0, r2_hi = 0.0;
    double target = 0.0;  // omega^2 mass, closed form
};

std::vector<Cp2Window> standard_windows();

/// Closed-form FS volume of the window.
double fs_window_mass(const Cp2Window& w);

bool window_contains(const Cp2Window& w, const Point& z);

/// Empirical zero measure vs the FS volume on the cap/window dictionary.
ExperimentReport global_equidist_experiment(const ExperimentConfig& cfg,
                                            const ParallelRunner& pool);

}  // namespace plurizero

#endif
