#include "plurizero/basis.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>

#include "plurizero/errors.hpp"

namespace plurizero {

using nlohmann::json;

std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::raw: return "raw";
        case Normalization::sup_normalized: return "sup-normalized";
        case Normalization::l2_orthonormal: return "L2-orthonormal";
        case Normalization::fs_orthonormal: return "fs-orthonormal";
    }
    return "?";
}

void BasisFamily::validate() const {
    const std::uint64_t dn = space_dimension(num_vars, degree);
    if (members.size() != dn)
        throw DimensionMismatchError("BasisFamily: " + std::to_string(members.size()) +
                                     " members, expected d_n = " + std::to_string(dn));
    for (const Polynomial& p : members) {
        if (p.num_vars() != num_vars)
            throw DimensionMismatchError("BasisFamily: member arity mismatch");
    }
}

std::vector<Complex> eval_basis(const BasisFamily& basis, const Point& z) {
    if (static_cast<int>(z.size()) != basis.num_vars)
        throw DimensionMismatchError("eval_basis: point dimension " + std::to_string(z.size()) +
                                     " != m = " + std::to_string(basis.num_vars));
    std::vector<Complex> values(basis.members.size());
    for (std::size_t j = 0; j < basis.members.size(); ++j) values[j] = basis.members[j].eval(z);
    return values;
}

double bergman_gamma(const std::vector<Complex>& basis_values) {
    double s = 0.0;
    for (const Complex& v : basis_values) s += std::norm(v);
    return s;
}

double bergman_gamma(const BasisFamily& basis, const Point& z) {
    return bergman_gamma(eval_basis(basis, z));
}

std::vector<Complex> unit_section(const BasisFamily& basis, const Point& z) {
    std::vector<Complex> values = eval_basis(basis, z);
    const double gamma = bergman_gamma(values);
    if (!(gamma > 0.0))
        throw DegeneratePointError("unit_section: Gamma_n(z) = 0 (degenerate point)");
    const double inv = 1.0 / std::sqrt(gamma);
    for (Complex& v : values) v *= inv;
    return values;
}

LogDecomposition log_decompose(const CoefficientVector& coeffs, const BasisFamily& basis,
                               const Point& z) {
    if (coeffs.size() != basis.members.size())
        throw DimensionMismatchError("log_decompose: coefficient length mismatch");
    if (basis.degree < 1)
        throw DimensionMismatchError("log_decompose: needs degree >= 1");
    std::vector<Complex> values = eval_basis(basis, z);
    const double gamma = bergman_gamma(values);
    if (!(gamma > 0.0))
        throw DegeneratePointError("log_decompose: Gamma_n(z) = 0 (degenerate point)");
    // <a, beta(z)> with the bilinear pairing of the representation f = sum a_j p_j.
    Complex inner = 0.0;
    const double inv = 1.0 / std::sqrt(gamma);
    for (std::size_t j = 0; j < coeffs.size(); ++j) inner += coeffs[j] * (values[j] * inv);
    if (inner == Complex{0.0, 0.0})
        throw PointOnZeroSetError("log_decompose: <a, beta(z)> = 0; z lies on the zero set");
    const double n = static_cast<double>(basis.degree);
    return {std::log(std::abs(inner)) / n, std::log(gamma) / (2.0 * n)};
}

BasisFamily monomial_basis(int num_vars, int degree) {
    BasisFamily basis;
    basis.num_vars = num_vars;
    basis.degree = degree;
    basis.normalization = Normalization::raw;
    basis.first_is_constant = true;
    for (const MultiIndex& idx : enumerate_multi_indices(num_vars, degree))
        basis.members.push_back(Polynomial::monomial(idx));
    basis.validate();
    return basis;
}

BasisFamily chebyshev_basis(int degree) {
    BasisFamily basis;
    basis.num_vars = 1;
    basis.degree = degree;
    basis.normalization = Normalization::sup_normalized;
    basis.first_is_constant = true;
    std::vector<Polynomial> cheb;
    cheb.push_back(Polynomial::constant(1, 1.0));
    if (degree >= 1) cheb.push_back(Polynomial::monomial(MultiIndex({1})));
    const Polynomial two_z = Polynomial::monomial(MultiIndex({1}), 2.0);
    for (int k = 2; k <= degree; ++k) {
        // T_k = 2 z T_{k-1} - T_{k-2}
        Polynomial prod(1);
        for (const auto& [idx, c] : cheb[k - 1].coeffs()) {
            MultiIndex raised = idx;
            raised.exponents[0] += 1;
            prod.set_coefficient(raised, prod.coefficient(raised) + 2.0 * c);
        }
        cheb.push_back(prod - cheb[k - 2]);
    }
    basis.members = std::move(cheb);
    basis.sup_scalings.assign(basis.members.size(), 1.0);
    basis.validate();
    return basis;
}

BasisFamily build_orthonormal_basis(const QuadratureRule& quadrature, const Weight& q,
                                    int degree) {
    if (quadrature.nodes.empty())
        throw DimensionMismatchError("build_orthonormal_basis: empty quadrature");
    const int m = static_cast<int>(quadrature.nodes.front().size());
    const std::uint64_t dn = space_dimension(m, degree);
    if (quadrature.nodes.size() < dn)
        throw SingularGramError("build_orthonormal_basis: " + std::to_string(quadrature.nodes.size()) +
                                    " nodes < d_n = " + std::to_string(dn),
                                std::numeric_limits<double>::infinity());
    for (double w : quadrature.weights) {
        if (!(w > 0.0))
            throw DimensionMismatchError("build_orthonormal_basis: weights must be positive");
    }

    const std::size_t num_nodes = quadrature.nodes.size();
    std::vector<double> wq(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i)
        wq[i] = quadrature.weights[i] * std::exp(-2.0 * degree * q(quadrature.nodes[i]));

    BasisFamily basis;
    basis.num_vars = m;
    basis.degree = degree;
    basis.normalization = Normalization::l2_orthonormal;

    const std::vector<MultiIndex> indices = enumerate_multi_indices(m, degree);
    std::vector<std::vector<Complex>> values;  // per accepted member, values at nodes
    values.reserve(dn);

    auto weighted_inner = [&](const std::vector<Complex>& u, const std::vector<Complex>& v) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < num_nodes; ++i) s += wq[i] * u[i] * std::conj(v[i]);
        return s;
    };

    for (const MultiIndex& idx : indices) {
        Polynomial poly = Polynomial::monomial(idx);
        std::vector<Complex> v(num_nodes);
        for (std::size_t i = 0; i < num_nodes; ++i) v[i] = poly.eval(quadrature.nodes[i]);
        const double norm0 = std::sqrt(std::abs(weighted_inner(v, v)));
        // modified Gram-Schmidt, two passes
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < values.size(); ++k) {
                const Complex c = weighted_inner(v, values[k]);
                if (c == Complex{0.0, 0.0}) continue;
                for (std::size_t i = 0; i < num_nodes; ++i) v[i] -= c * values[k][i];
                poly = poly - basis.members[k] * c;
            }
        }
        const double norm = std::sqrt(std::abs(weighted_inner(v, v)));
        if (!(norm > 1e-10 * std::max(norm0, 1e-300))) {
            throw SingularGramError(
                "build_orthonormal_basis: Gram matrix numerically singular at member " +
                    std::to_string(values.size()) + " (nodes degenerate); condition estimate " +
                    std::to_string(norm0 / std::max(norm, 1e-300)),
                norm0 / std::max(norm, 1e-300));
        }
        const double inv = 1.0 / norm;
        for (Complex& x : v) x *= inv;
        poly = poly * inv;
        // phase convention: grlex-top coefficient real positive
        const Complex top = poly.coefficient(idx);
        if (top != Complex{0.0, 0.0}) {
            const Complex phase = std::abs(top) / top;
            poly = poly * phase;
            for (Complex& x : v) x *= phase;
        }
        values.push_back(std::move(v));
        basis.members.push_back(std::move(poly));
    }
    basis.first_is_constant = basis.members.front().degree() == 0;
    basis.validate();
    return basis;
}

BasisFamily normalize_sup(const BasisFamily& basis, const WeightedCompact& kq) {
    if (kq.num_vars() != basis.num_vars)
        throw DimensionMismatchError("normalize_sup: compact arity mismatch");
    BasisFamily out = basis;
    out.normalization = Normalization::sup_normalized;
    out.sup_scalings.assign(basis.members.size(), 1.0);
    for (std::size_t j = 0; j < out.members.size(); ++j) {
        const double sup = kq.weighted_sup(out.members[j], basis.degree);
        if (!(sup > 0.0))
            throw DegeneratePointError("normalize_sup: member " + std::to_string(j) +
                                       " identically zero on the K grid");
        const bool constant_member = j == 0 && out.members[j].degree() == 0;
        if (constant_member) {
            // standing assumption p_n1 == 1: pin the constant member when its
            // own weighted sup already fits in (0, 1]
            const Complex c = out.members[0].coeffs().begin()->second;
            const double sup_of_one = sup / std::abs(c);
            if (sup_of_one <= 1.0 + 1e-12) {
                out.members[0] = Polynomial::constant(basis.num_vars, 1.0);
                out.sup_scalings[0] = std::abs(c);
                continue;
            }
        }
        out.members[j] = out.members[j] * Complex{1.0 / sup, 0.0};
        out.sup_scalings[j] = sup;
    }
    out.first_is_constant = out.members.front().degree() == 0;
    return out;
}

BasisFamily mix_family(const BasisFamily& basis, const std::vector<std::vector<Complex>>& matrix) {
    const std::size_t d = basis.members.size();
    if (matrix.size() != d)
        throw DimensionMismatchError("mix_family: matrix row count mismatch");
    BasisFamily out = basis;
    out.sup_scalings.clear();
    for (std::size_t r = 0; r < d; ++r) {
        if (matrix[r].size() != d)
            throw DimensionMismatchError("mix_family: matrix column count mismatch");
        out.members[r] = linear_combination(matrix[r], basis.members);
    }
    out.first_is_constant = out.members.front().degree() == 0;
    out.normalization = Normalization::raw;
    return out;
}

std::string basis_to_json(const BasisFamily& basis) {
    json doc;
    doc["m"] = basis.num_vars;
    doc["n"] = basis.degree;
    doc["order"] = "grlex";
    doc["normalization"] = to_string(basis.normalization);
    doc["first_is_constant"] = basis.first_is_constant;
    json members = json::array();
    for (const Polynomial& p : basis.members) {
        json terms = json::array();
        for (const auto& [idx, c] : p.coeffs())
            terms.push_back({idx.exponents, c.real(), c.imag()});
        members.push_back(std::move(terms));
    }
    doc["members"] = std::move(members);
    if (!basis.sup_scalings.empty()) doc["sup_scalings"] = basis.sup_scalings;
    return doc.dump(2);
}

BasisFamily basis_from_json(const std::string& text) {
    const json doc = json::parse(text);
    BasisFamily basis;
    basis.num_vars = doc.at("m").get<int>();
    basis.degree = doc.at("n").get<int>();
    if (doc.at("order").get<std::string>() != "grlex")
        throw DimensionMismatchError("basis_from_json: unsupported member order");
    const std::string norm = doc.at("normalization").get<std::string>();
    if (norm == "raw") basis.normalization = Normalization::raw;
    else if (norm == "sup-normalized") basis.normalization = Normalization::sup_normalized;
    else if (norm == "L2-orthonormal") basis.normalization = Normalization::l2_orthonormal;
    else if (norm == "fs-orthonormal") basis.normalization = Normalization::fs_orthonormal;
    else throw DimensionMismatchError("basis_from_json: unknown normalization '" + norm + "'");
    basis.first_is_constant = doc.value("first_is_constant", false);
    for (const json& terms : doc.at("members")) {
        Polynomial p(basis.num_vars);
        for (const json& t : terms) {
            MultiIndex idx(t.at(0).get<std::vector<int>>());
            p.set_coefficient(idx, Complex{t.at(1).get<double>(), t.at(2).get<double>()});
        }
        basis.members.push_back(std::move(p));
    }
    if (doc.contains("sup_scalings"))
        basis.sup_scalings = doc["sup_scalings"].get<std::vector<double>>();
    basis.validate();
    return basis;
}

}  // namespace plurizero
