#ifndef PLURIZERO_BASIS_HPP
#define PLURIZERO_BASIS_HPP

#include <string>
#include <vector>

#include "plurizero/compact.hpp"
#include "plurizero/polynomial.hpp"
#include "plurizero/quadrature.hpp"

namespace plurizero {

enum class Normalization { raw, sup_normalized, l2_orthonormal, fs_orthonormal };

std::string to_string(Normalization n);

/// An indexed family {p_nj} spanning the degree-<= n polynomial space in m
/// variables, with d_n = C(m+n, n) members in grlex order.
struct BasisFamily {
    int num_vars = 1;
    int degree = 0;
    std::vector<Polynomial> members;
    Normalization normalization = Normalization::raw;
    bool first_is_constant = false;
    /// Audit trail from normalize_sup: the sup each member was divided by.
    std::vector<double> sup_scalings;

    std::size_t dimension() const { return members.size(); }
    void validate() const;  // throws when the member count is not d_n
};

/// (p_n1(z), ..., p_nd(z)) in basis order.
std::vector<Complex> eval_basis(const BasisFamily& basis, const Point& z);

/// Gamma_n(z) = sum_j |p_nj(z)|^2.
double bergman_gamma(const BasisFamily& basis, const Point& z);
double bergman_gamma(const std::vector<Complex>& basis_values);

/// beta(z) = p(z) / sqrt(Gamma_n(z)); unit vector. Throws DegeneratePointError
/// when Gamma_n(z) = 0.
std::vector<Complex> unit_section(const BasisFamily& basis, const Point& z);

struct LogDecomposition {
    double inner_part;  // (1/n) log |<a, beta(z)>|
    double gamma_part;  // (1/2n) log Gamma_n(z)
    double sum() const { return inner_part + gamma_part; }
};

/// Splits (1/n) log|f_n(z)| into the unit-pairing part and the Bergman growth
/// part. Throws PointOnZeroSetError when <a, beta(z)> = 0 exactly.
LogDecomposition log_decompose(const CoefficientVector& coeffs, const BasisFamily& basis,
                               const Point& z);

/// Monomial family z^alpha, |alpha| <= n, grlex order. Raw normalization
/// (each monomial already has sup 1 on the closed unit disk/polydisk).
BasisFamily monomial_basis(int num_vars, int degree);

/// Chebyshev family T_0..T_n on [-1, 1] (sup-normalized there by construction).
BasisFamily chebyshev_basis(int degree);

/// Gram-Schmidt (modified, twice re-orthogonalized) of the grlex monomial list
/// against <p, r> = sum_i w_i p(z_i) conj(r(z_i)) e^{-2 n q(z_i)}.
/// Throws SingularGramError with a condition estimate when nodes degenerate.
BasisFamily build_orthonormal_basis(const QuadratureRule& quadrature, const Weight& q, int degree);

/// Each member divided by its estimated weighted sup over the K grid; the
/// constant member is pinned to exactly 1 whenever that keeps its weighted
/// sup within (0, 1].
BasisFamily normalize_sup(const BasisFamily& basis, const WeightedCompact& kq);

/// Replace members by rows of matrix * members (for Gamma invariance checks
/// under unitary mixing). matrix is dimension x dimension, row-major.
BasisFamily mix_family(const BasisFamily& basis, const std::vector<std::vector<Complex>>& matrix);

std::string basis_to_json(const BasisFamily& basis);
BasisFamily basis_from_json(const std::string& text);

}  // namespace plurizero

#endif
