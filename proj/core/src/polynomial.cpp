#include "plurizero/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plurizero {

Polynomial::Polynomial(int num_vars, std::map<MultiIndex, Complex, GrlexLess> coeffs)
    : num_vars_(num_vars), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == Complex{0.0, 0.0}) {
            it = coeffs_.erase(it);
        } else {
            if (it->first.num_vars() != num_vars_)
                throw std::invalid_argument("Polynomial: multi-index arity mismatch");
            ++it;
        }
    }
    recompute_degree();
}

Polynomial Polynomial::constant(int num_vars, Complex value) {
    Polynomial p(num_vars);
    p.set_coefficient(MultiIndex(std::vector<int>(num_vars, 0)), value);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& index, Complex coefficient) {
    Polynomial p(index.num_vars());
    p.set_coefficient(index, coefficient);
    return p;
}

Polynomial Polynomial::from_dense(const std::vector<Complex>& dense) {
    Polynomial p(1);
    for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != Complex{0.0, 0.0})
            p.set_coefficient(MultiIndex({static_cast<int>(j)}), dense[j]);
    }
    return p;
}

Complex Polynomial::coefficient(const MultiIndex& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void Polynomial::set_coefficient(const MultiIndex& index, Complex value) {
    if (index.num_vars() != num_vars_)
        throw std::invalid_argument("Polynomial: multi-index arity mismatch");
    if (value == Complex{0.0, 0.0}) {
        coeffs_.erase(index);
    } else {
        coeffs_[index] = value;
    }
    recompute_degree();
}

Complex Polynomial::eval(const Point& z) const {
    if (static_cast<int>(z.size()) != num_vars_)
        throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
    if (num_vars_ == 1) return eval1(z[0]);
    // Power tables per variable up to the polynomial degree.
    std::vector<std::vector<Complex>> powers(num_vars_);
    for (int v = 0; v < num_vars_; ++v) {
        powers[v].resize(degree_ + 1);
        powers[v][0] = 1.0;
        for (int e = 1; e <= degree_; ++e) powers[v][e] = powers[v][e - 1] * z[v];
    }
    Complex acc = 0.0;
    for (const auto& [idx, c] : coeffs_) {
        Complex term = c;
        for (int v = 0; v < num_vars_; ++v) term *= powers[v][idx.exponents[v]];
        acc += term;
    }
    return acc;
}

Complex Polynomial::eval1(Complex z) const {
    if (num_vars_ != 1) throw std::invalid_argument("Polynomial::eval1 requires m = 1");
    // Horner on the dense expansion.
    Complex acc = 0.0;
    int next = degree_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first.exponents[0];
        for (; next > e; --next) acc *= z;
        acc += it->second;
    }
    for (; next > 0; --next) acc *= z;
    return acc;
}

std::vector<Complex> Polynomial::dense1() const {
    if (num_vars_ != 1) throw std::invalid_argument("Polynomial::dense1 requires m = 1");
    std::vector<Complex> dense(degree_ + 1, Complex{0.0, 0.0});
    for (const auto& [idx, c] : coeffs_) dense[idx.exponents[0]] = c;
    return dense;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("Polynomial::derivative: bad variable");
    Polynomial out(num_vars_);
    for (const auto& [idx, c] : coeffs_) {
        const int e = idx.exponents[var];
        if (e == 0) continue;
        MultiIndex lowered = idx;
        lowered.exponents[var] = e - 1;
        out.coeffs_[lowered] += c * static_cast<double>(e);
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
        it = (it->second == Complex{0.0, 0.0}) ? out.coeffs_.erase(it) : std::next(it);
    }
    out.recompute_degree();
    return out;
}

Polynomial Polynomial::leading_form() const {
    Polynomial out(num_vars_);
    for (const auto& [idx, c] : coeffs_) {
        if (idx.total_degree() == degree_) out.coeffs_[idx] = c;
    }
    out.recompute_degree();
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (other.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: arity mismatch");
    Polynomial out = *this;
    for (const auto& [idx, c] : other.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(idx, c);
        if (!inserted) it->second += c;
        if (it->second == Complex{0.0, 0.0}) out.coeffs_.erase(it);
    }
    out.recompute_degree();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (other * Complex{-1.0, 0.0});
}

Polynomial Polynomial::operator*(Complex scalar) const {
    Polynomial out(num_vars_);
    if (scalar == Complex{0.0, 0.0}) return out;
    out.coeffs_ = coeffs_;
    for (auto& [idx, c] : out.coeffs_) c *= scalar;
    out.recompute_degree();
    return out;
}

double Polynomial::coeff_norm1() const {
    double s = 0.0;
    for (const auto& [idx, c] : coeffs_) s += std::abs(c);
    return s;
}

Polynomial Polynomial::trimmed(double relative_tol) const {
    double maxc = 0.0;
    for (const auto& [idx, c] : coeffs_) maxc = std::max(maxc, std::abs(c));
    Polynomial out(num_vars_);
    for (const auto& [idx, c] : coeffs_) {
        if (std::abs(c) > relative_tol * maxc) out.coeffs_[idx] = c;
    }
    out.recompute_degree();
    return out;
}

void Polynomial::recompute_degree() {
    degree_ = 0;
    for (const auto& [idx, c] : coeffs_) degree_ = std::max(degree_, idx.total_degree());
}

Polynomial linear_combination(const CoefficientVector& coeffs,
                              const std::vector<Polynomial>& members) {
    if (coeffs.size() != members.size())
        throw std::invalid_argument("linear_combination: length mismatch");
    if (members.empty()) throw std::invalid_argument("linear_combination: empty basis");
    const int m = members[0].num_vars();
    std::map<MultiIndex, Complex, GrlexLess> acc;
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (coeffs[j] == Complex{0.0, 0.0}) continue;
        for (const auto& [idx, c] : members[j].coeffs()) acc[idx] += coeffs[j] * c;
    }
    return Polynomial(m, std::move(acc));
}

}  // namespace plurizero
