#include "plurizero/extremal.hpp"

#include <cmath>

#include "plurizero/errors.hpp"

namespace plurizero {

namespace {

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

double interval_green(Complex z) {
    // log|z + sqrt(z^2 - 1)|, branch chosen so the modulus is >= 1.
    const Complex s = std::sqrt(z * z - Complex{1.0, 0.0});
    const double a = std::abs(z + s);
    const double b = std::abs(z - s);
    return std::log(std::max({a, b, 1.0}));
}

}  // namespace

double extremal_analytic(const WeightedCompact& kq, const Point& z) {
    if (!kq.unweighted())
        throw NoClosedFormError(
            "extremal_analytic: no closed form for nonzero weights; use extremal_numeric");
    if (static_cast<int>(z.size()) != kq.num_vars())
        throw DimensionMismatchError("extremal_analytic: point dimension mismatch");
    switch (kq.kind()) {
        case CompactKind::unit_disk:
        case CompactKind::circle:
            return log_plus(std::abs(z[0]));
        case CompactKind::interval:
            return interval_green(z[0]);
        case CompactKind::polydisk:
            return std::max(log_plus(std::abs(z[0])), log_plus(std::abs(z[1])));
        case CompactKind::unit_ball:
            return log_plus(std::sqrt(std::norm(z[0]) + std::norm(z[1])));
        case CompactKind::custom_grid:
            throw NoClosedFormError(
                "extremal_analytic: no closed form for custom grids; use extremal_numeric");
    }
    throw NoClosedFormError("extremal_analytic: unknown compact kind");
}

double extremal_numeric(const WeightedCompact& kq, int degree, const BasisFamily& basis,
                        const Point& z) {
    if (basis.degree != degree)
        throw DimensionMismatchError("extremal_numeric: basis degree mismatch");
    if (kq.num_vars() != basis.num_vars)
        throw DimensionMismatchError("extremal_numeric: arity mismatch");
    const double gamma = bergman_gamma(basis, z);
    if (!(gamma > 0.0))
        throw DegeneratePointError("extremal_numeric: Gamma_n(z) = 0");
    return std::log(gamma) / (2.0 * degree);
}

ExtremalFunction ExtremalFunction::analytic(const WeightedCompact& kq) {
    if (!kq.unweighted())
        throw NoClosedFormError("ExtremalFunction::analytic requires q = 0");
    if (kq.kind() == CompactKind::custom_grid)
        throw NoClosedFormError("ExtremalFunction::analytic: custom grids have no closed form");
    return ExtremalFunction(kq, true, 0, BasisFamily{});
}

ExtremalFunction ExtremalFunction::bergman_numeric(const WeightedCompact& kq, int degree,
                                                   BasisFamily basis) {
    if (basis.degree != degree)
        throw DimensionMismatchError("ExtremalFunction::bergman_numeric: basis degree mismatch");
    return ExtremalFunction(kq, false, degree, std::move(basis));
}

double ExtremalFunction::operator()(const Point& z) const {
    if (source_analytic_) return extremal_analytic(kq_, z);
    return extremal_numeric(kq_, degree_, *basis_, z);
}

}  // namespace plurizero
