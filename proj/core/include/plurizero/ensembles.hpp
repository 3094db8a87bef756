#ifndef PLURIZERO_ENSEMBLES_HPP
#define PLURIZERO_ENSEMBLES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "plurizero/polynomial.hpp"
#include "plurizero/rng.hpp"

namespace plurizero {

enum class LawKind { gaussian, fubini_study, heavy_tail_iid };

std::string to_string(LawKind kind);

/// Probability law on coefficient space. gaussian: i.i.d. standard complex
/// normals. fubini_study: dehomogenized (dim+1)-Gaussian (the FS density on
/// the affine chart). heavy_tail_iid: i.i.d. entries from the planar density
/// c_gamma / (1 + |z|^2 log(e + |z|)^{gamma+1}), which is bounded by c_gamma
/// and has the tail P(log|z| > R) <= delta / R^gamma for all R >= 1.
class CoefficientLaw {
  public:
    static CoefficientLaw gaussian();
    static CoefficientLaw fubini_study();
    /// delta <= 0 selects the certified default 1.5 * (2 pi c_gamma / gamma).
    /// Requires gamma > 2 * num_vars; throws std::invalid_argument otherwise.
    static CoefficientLaw heavy_tail(double gamma, double delta = 0.0, int num_vars = 1);

    LawKind kind() const;
    int num_vars() const;        // heavy tail: the m of the gamma > 2m constraint
    double gamma() const;        // heavy tail only
    double delta() const;        // certified tail constant
    double density_bound() const;  // N = c_gamma (max of the planar density)

    /// One coefficient draw of the given dimension.
    CoefficientVector sample(std::size_t dim, TrialRng& rng) const;

    /// One radial draw |a| of the heavy-tail entry law (for tail checks).
    double sample_radius(TrialRng& rng) const;

  private:
    struct Data;
    std::shared_ptr<const Data> data_;
    explicit CoefficientLaw(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
};

enum class MomentMethod { closed_form_radial, quadrature, monte_carlo_bound };

std::string to_string(MomentMethod method);

/// Certificate for the log-pairing moment bound: E |log|<a, v>||^alpha <= D_n
/// over unit vectors v. Unitary-invariant laws carry a dimension-independent
/// constant; the heavy-tail law carries D_n = B d_n^{alpha/gamma}.
struct MomentCertificate {
    double alpha = 2.0;
    MomentMethod method = MomentMethod::quadrature;
    double d_value = 0.0;       // D at the reference dimension (gaussian/FS: D_0)
    double b_estimate = 0.0;    // heavy tail: raw MC estimate of B
    double b_se = 0.0;          // heavy tail: SE of the B estimate
    double b_certified = 0.0;   // heavy tail: B + 3 SE, used in d_at
    double gamma = 0.0;
    bool dim_dependent = false;

    /// D_n at polynomial-space dimension d_n.
    double d_at(double dim) const;
};

/// Exact radial integral 2 int r |log r|^alpha w(r) dr for the gaussian
/// (w = e^{-r^2}) and Fubini-Study (w = (1+r^2)^{-2}) laws, by adaptive
/// quadrature.
double radial_log_moment(LawKind kind, double alpha);

/// Signed variant (alpha = 1 without absolute value): gaussian gives
/// -euler_gamma / 2, Fubini-Study gives 0 by the r <-> 1/r symmetry.
double signed_log_moment(LawKind kind);

/// Moment certificate for the law: closed-form radial quadrature for
/// gaussian/FS; Monte Carlo bound B * d_n^{alpha/gamma} for the heavy tail.
MomentCertificate moment_constant(const CoefficientLaw& law, double alpha,
                                  std::uint64_t seed = 0x5eedULL);

struct MomentCheckRow {
    double estimate = 0.0;
    double se = 0.0;
};

struct MomentCheckReport {
    double alpha = 0.0;
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::vector<MomentCheckRow> per_vector;
    double max_estimate = 0.0;
    double max_se = 0.0;
    double certificate = 0.0;
    bool pass = false;  // equality within 3 SE (gaussian/FS); <= certificate (heavy tail)
};

/// MC check of the moment condition over random unit vectors.
MomentCheckReport empirical_moment_check(const CoefficientLaw& law, std::size_t dim, double alpha,
                                         std::size_t trials, std::uint64_t seed,
                                         std::size_t num_vectors = 32);

struct SummabilityReport {
    double alpha = 0.0;
    int num_vars = 1;
    std::vector<double> terms;         // D_n^{2/alpha} / n^2 for n = 1..n_max
    std::vector<double> partial_sums;
    double fitted_tail_exponent = 0.0;  // log-log slope over the tail half
    bool convergent = false;            // fitted exponent < -1
};

/// Partial sums of D_n^{2/alpha}/n^2 plus a fitted tail exponent.
SummabilityReport summability_audit(const CoefficientLaw& law, double alpha, int num_vars,
                                    int n_max, const MomentCertificate& certificate);

}  // namespace plurizero

#endif
