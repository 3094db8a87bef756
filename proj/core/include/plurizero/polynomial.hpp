#ifndef PLURIZERO_POLYNOMIAL_HPP
#define PLURIZERO_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <vector>

#include "plurizero/multi_index.hpp"

namespace plurizero {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;  // a point of C^m

/// Coefficient vector a^(n) paired with a basis of the same length.
using CoefficientVector = std::vector<Complex>;

/// Complex polynomial in m variables, stored as a grlex-ordered term map.
class Polynomial {
  public:
    explicit Polynomial(int num_vars = 1) : num_vars_(num_vars) {}
    Polynomial(int num_vars, std::map<MultiIndex, Complex, GrlexLess> coeffs);

    static Polynomial constant(int num_vars, Complex value);
    static Polynomial monomial(const MultiIndex& index, Complex coefficient = 1.0);
    /// Univariate polynomial from dense coefficients c[0] + c[1] z + ...
    static Polynomial from_dense(const std::vector<Complex>& dense);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<MultiIndex, Complex, GrlexLess>& coeffs() const { return coeffs_; }

    Complex coefficient(const MultiIndex& index) const;
    void set_coefficient(const MultiIndex& index, Complex value);

    Complex eval(const Point& z) const;
    Complex eval1(Complex z) const;  // univariate shortcut

    /// Dense univariate coefficients c[0..degree]; requires num_vars == 1.
    std::vector<Complex> dense1() const;

    Polynomial derivative(int var) const;
    /// Terms of top total degree (the leading form).
    Polynomial leading_form() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(Complex scalar) const;

    /// Sum of |coefficient| over all terms.
    double coeff_norm1() const;

    /// Drop terms with |c| <= tol * max|c|.
    Polynomial trimmed(double relative_tol) const;

  private:
    void recompute_degree();

    int num_vars_ = 1;
    int degree_ = 0;  // degree of the zero polynomial is 0 by convention
    std::map<MultiIndex, Complex, GrlexLess> coeffs_;
};

/// f = sum_j coeffs[j] * members[j]; all members share num_vars.
Polynomial linear_combination(const CoefficientVector& coeffs,
                              const std::vector<Polynomial>& members);

}  // namespace plurizero

#endif
