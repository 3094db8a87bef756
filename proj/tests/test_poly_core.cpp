#include <doctest.h>

#include <cmath>
#include <complex>

#include "plurizero/basis.hpp"
#include "plurizero/compact.hpp"
#include "plurizero/errors.hpp"
#include "plurizero/rng.hpp"
#include "oracles.hpp"

using namespace plurizero;

TEST_CASE("space_dimension binomials") {
    CHECK(space_dimension(1, 5) == 6);
    CHECK(space_dimension(2, 3) == 10);
    CHECK(space_dimension(3, 0) == 1);
    CHECK(space_dimension(2, 100) == 5151);
    CHECK_THROWS_AS(space_dimension(40, 1000000), std::overflow_error);
    CHECK_THROWS_AS(space_dimension(0, 3), std::invalid_argument);
}

TEST_CASE("grlex enumeration is degree-then-lex and complete") {
    const auto indices = enumerate_multi_indices(2, 2);
    REQUIRE(indices.size() == 6);
    CHECK(indices[0].exponents == std::vector<int>{0, 0});
    CHECK(indices[1].exponents == std::vector<int>{0, 1});
    CHECK(indices[2].exponents == std::vector<int>{1, 0});
    CHECK(indices[3].exponents == std::vector<int>{0, 2});
    CHECK(indices[4].exponents == std::vector<int>{1, 1});
    CHECK(indices[5].exponents == std::vector<int>{2, 0});
    for (std::size_t i = 1; i < indices.size(); ++i)
        CHECK(grlex_less(indices[i - 1], indices[i]));
}

TEST_CASE("polynomial evaluation and arithmetic") {
    // p = (1+i) + 2 z^3
    Polynomial p = Polynomial::from_dense({{1.0, 1.0}, 0.0, 0.0, {2.0, 0.0}});
    CHECK(p.degree() == 3);
    CHECK(p.eval1({1.0, 0.0}) == Complex{3.0, 1.0});
    const Polynomial dp = p.derivative(0);
    CHECK(dp.degree() == 2);
    CHECK(dp.eval1({2.0, 0.0}) == Complex{24.0, 0.0});

    // degree-0 evaluation is exact
    const Polynomial c = Polynomial::constant(2, {0.25, -0.5});
    CHECK(c.eval({{100.0, 3.0}, {-7.0, 2.0}}) == Complex{0.25, -0.5});

    // bivariate eval
    Polynomial q(2);
    q.set_coefficient(MultiIndex({1, 1}), 1.0);
    q.set_coefficient(MultiIndex({0, 0}), -1.0);
    CHECK(q.eval({{2.0, 0.0}, {3.0, 0.0}}) == Complex{5.0, 0.0});
}

TEST_CASE("eval_basis on monomials") {
    const BasisFamily basis = monomial_basis(1, 2);
    const auto values = eval_basis(basis, {{2.0, 0.0}});
    REQUIRE(values.size() == 3);
    CHECK(values[0] == Complex{1.0, 0.0});
    CHECK(values[1] == Complex{2.0, 0.0});
    CHECK(values[2] == Complex{4.0, 0.0});
    CHECK_THROWS_AS(eval_basis(basis, {{0.0, 0.0}, {0.0, 0.0}}), DimensionMismatchError);
}

TEST_CASE("first member of a constant-led family is 1 at every point") {
    const BasisFamily basis = monomial_basis(2, 3);
    REQUIRE(basis.first_is_constant);
    TrialRng rng(7, {1});
    for (int i = 0; i < 16; ++i) {
        const Point z{{rng.normal(), rng.normal()}, {rng.normal(), rng.normal()}};
        CHECK(eval_basis(basis, z)[0] == Complex{1.0, 0.0});
    }
}

TEST_CASE("chebyshev family members have sup norm 1 on [-1,1] (grid oracle)") {
    const BasisFamily basis = chebyshev_basis(1);
    const auto values = eval_basis(basis, {{1.0, 0.0}});
    for (const Complex& v : values) CHECK(std::abs(v) <= 1.0 + 1e-12);
    // grid oracle over a fine mesh at higher degree
    const BasisFamily higher = chebyshev_basis(7);
    for (const Polynomial& member : higher.members) {
        double sup = 0.0;
        for (int k = 0; k <= 2000; ++k) {
            const double x = -1.0 + 2.0 * k / 2000.0;
            sup = std::max(sup, std::abs(member.eval1({x, 0.0})));
        }
        CHECK(sup <= 1.0 + 1e-10);
        CHECK(sup >= 0.99);  // Chebyshev polynomials attain 1
    }
}

TEST_CASE("bergman_gamma values") {
    const BasisFamily b3 = monomial_basis(1, 3);
    // |z| = 1: four unit-modulus terms
    CHECK(bergman_gamma(b3, {{0.0, 1.0}}) == doctest::Approx(4.0).epsilon(1e-14));
    const BasisFamily b2 = monomial_basis(1, 2);
    CHECK(bergman_gamma(b2, {{2.0, 0.0}}) == doctest::Approx(21.0).epsilon(1e-14));
}

TEST_CASE("circle-orthonormal basis at 0: only the constant survives") {
    const WeightedCompact circle = WeightedCompact::circle();
    const BasisFamily basis = build_orthonormal_basis(circle.quadrature_for_degree(5),
                                                      circle.weight(), 5);
    CHECK(bergman_gamma(basis, {{0.0, 0.0}}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unit_section") {
    const BasisFamily basis = monomial_basis(1, 1);
    const auto at0 = unit_section(basis, {{0.0, 0.0}});
    CHECK(at0[0] == Complex{1.0, 0.0});
    CHECK(at0[1] == Complex{0.0, 0.0});
    const auto at1 = unit_section(basis, {{1.0, 0.0}});
    CHECK(std::abs(at1[0] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-14);
    CHECK(std::abs(at1[1] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-14);

    TrialRng rng(11, {2});
    for (int i = 0; i < 64; ++i) {
        const Point z{{2.0 * rng.normal(), 2.0 * rng.normal()}};
        const auto beta = unit_section(monomial_basis(1, 6), z);
        double norm2 = 0.0;
        for (const Complex& v : beta) norm2 += std::norm(v);
        CHECK(std::abs(std::sqrt(norm2) - 1.0) < 1e-12);
    }
}

TEST_CASE("log_decompose identity and signals") {
    const BasisFamily b1 = monomial_basis(1, 1);
    // constant polynomial: f = 1, log|f| = 0
    const CoefficientVector e1{{1.0, 0.0}, {0.0, 0.0}};
    const LogDecomposition d = log_decompose(e1, b1, {{0.0, 0.0}});
    CHECK(d.sum() == doctest::Approx(0.0).epsilon(1e-14));

    // a orthogonal to beta(z): z = 0, beta = (1, 0), a = (0, 1)
    const CoefficientVector orth{{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(log_decompose(orth, b1, {{0.0, 0.0}}), PointOnZeroSetError);
}

TEST_CASE("log_decompose sum identity holds for 1000 random draws") {
    const int n = 5;
    const BasisFamily basis = monomial_basis(1, n);
    TrialRng rng(123, {3});
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        CoefficientVector a(basis.dimension());
        for (Complex& c : a) c = rng.complex_normal();
        const Complex z = oracles::random_in_disk(rng, 1.5);
        Complex fz = 0.0;
        Complex zp = 1.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            fz += a[j] * zp;
            zp *= z;
        }
        if (std::abs(fz) < 1e-12) continue;  // too close to the zero set
        const LogDecomposition d = log_decompose(a, basis, {z});
        const double direct = std::log(std::abs(fz)) / n;
        CHECK(std::abs(d.sum() - direct) <= 1e-10 * (1.0 + std::abs(direct)));
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("build_orthonormal_basis: circle trapezoid rule returns monomials") {
    const int n = 2;
    const QuadratureRule rule = circle_rule(4 * n + 4);
    const BasisFamily basis = build_orthonormal_basis(rule, Weight(), n);
    REQUIRE(basis.dimension() == 3);
    // already orthonormal under normalized arclength: members = 1, z, z^2
    for (int j = 0; j <= n; ++j) {
        const Polynomial& p = basis.members[j];
        CHECK(std::abs(p.coefficient(MultiIndex({j})) - Complex{1.0, 0.0}) < 1e-12);
        CHECK(p.coeff_norm1() == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(basis.normalization == Normalization::l2_orthonormal);
}

TEST_CASE("build_orthonormal_basis: Gram matrix is the identity to 1e-8") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const int n = 6;
    const QuadratureRule rule = disk.quadrature_for_degree(n);
    const BasisFamily basis = build_orthonormal_basis(rule, disk.weight(), n);
    const std::size_t d = basis.dimension();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex g = 0.0;
            for (std::size_t k = 0; k < rule.size(); ++k) {
                g += rule.weights[k] * basis.members[i].eval(rule.nodes[k]) *
                     std::conj(basis.members[j].eval(rule.nodes[k]));
            }
            CHECK(std::abs(g - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) < 1e-8);
        }
    }
}

TEST_CASE("build_orthonormal_basis: arcsine nodes give normalized Chebyshev") {
    const QuadratureRule rule = chebyshev_rule(64);
    const BasisFamily basis = build_orthonormal_basis(rule, Weight(), 1);
    // direct quadrature oracle: <T0,T0> = 1, <T1,T1> = 1/2 under arcsine
    double t1_norm2 = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k)
        t1_norm2 += rule.weights[k] * std::norm(rule.nodes[k][0]);
    CHECK(t1_norm2 == doctest::Approx(0.5).epsilon(1e-12));
    // members: 1 and sqrt(2) T1 (phase fixed positive)
    CHECK(std::abs(basis.members[0].coefficient(MultiIndex({0})) - Complex{1.0, 0.0}) < 1e-10);
    CHECK(std::abs(basis.members[1].coefficient(MultiIndex({1})) -
                   Complex{std::sqrt(2.0), 0.0}) < 1e-10);
}

TEST_CASE("build_orthonormal_basis: degenerate nodes fail with a condition estimate") {
    QuadratureRule rule;
    for (int i = 0; i < 8; ++i) {
        rule.nodes.push_back({Complex{0.5, 0.0}});  // one repeated point
        rule.weights.push_back(0.125);
    }
    try {
        build_orthonormal_basis(rule, Weight(), 2);
        FAIL("expected SingularGramError");
    } catch (const SingularGramError& e) {
        CHECK(e.condition_estimate > 1e8);
    }
}

TEST_CASE("normalize_sup on canonical families") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const BasisFamily raw = monomial_basis(1, 3);
    const BasisFamily normalized = normalize_sup(raw, disk);
    CHECK(normalized.normalization == Normalization::sup_normalized);
    for (std::size_t j = 0; j < raw.members.size(); ++j) {
        // |z^j| already has sup 1 on the closed unit disk
        const MultiIndex idx({static_cast<int>(j)});
        CHECK(std::abs(normalized.members[j].coefficient(idx) - Complex{1.0, 0.0}) < 1e-12);
    }

    // 2z scales down to z
    BasisFamily doubled = raw;
    doubled.members[1] = doubled.members[1] * Complex{2.0, 0.0};
    const BasisFamily fixed = normalize_sup(doubled, disk);
    CHECK(std::abs(fixed.members[1].coefficient(MultiIndex({1})) - Complex{1.0, 0.0}) < 1e-12);
    CHECK(fixed.sup_scalings[1] == doctest::Approx(2.0).epsilon(1e-12));

    // refinement oracle: weighted sup on a 2x finer grid stays <= 1 + 5e-3
    for (const Polynomial& member : fixed.members)
        CHECK(disk.weighted_sup(member, fixed.degree, 2) <= 1.0 + 5e-3);
}

TEST_CASE("normalize_sup rejects an identically-zero member") {
    BasisFamily basis = monomial_basis(1, 1);
    basis.members[1] = Polynomial(1);  // zero polynomial
    CHECK_THROWS_AS(normalize_sup(basis, WeightedCompact::unit_disk()), DegeneratePointError);
}

TEST_CASE("gamma positivity floor for constant-led sup-normalized families") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const BasisFamily basis = normalize_sup(monomial_basis(1, 4), disk);
    REQUIRE(basis.first_is_constant);
    TrialRng rng(5, {4});
    for (int i = 0; i < 128; ++i) {
        const Point z{{3.0 * rng.normal(), 3.0 * rng.normal()}};
        CHECK(bergman_gamma(basis, z) >= 1.0 - 1e-14);
    }
}

TEST_CASE("sup-normalized growth bound (1/2n) log Gamma <= (1/2n) log d_n + V") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const int n = 25;
    const BasisFamily basis = normalize_sup(monomial_basis(1, n), disk);
    const double dn = static_cast<double>(space_dimension(1, n));
    TrialRng rng(17, {5});
    for (int i = 0; i < 200; ++i) {
        const Complex z = oracles::random_in_disk(rng, 3.0);
        const double lhs = std::log(bergman_gamma(basis, {z})) / (2.0 * n);
        const double v = std::log(std::max(1.0, std::abs(z)));
        CHECK(lhs <= std::log(dn) / (2.0 * n) + v + 1e-9);
    }
}

TEST_CASE("basis JSON round trip") {
    const WeightedCompact circle = WeightedCompact::circle();
    const BasisFamily basis =
        build_orthonormal_basis(circle.quadrature_for_degree(3), circle.weight(), 3);
    const std::string text = basis_to_json(basis);
    const BasisFamily back = basis_from_json(text);
    CHECK(back.num_vars == basis.num_vars);
    CHECK(back.degree == basis.degree);
    CHECK(back.normalization == basis.normalization);
    REQUIRE(back.dimension() == basis.dimension());
    TrialRng rng(29, {6});
    for (int i = 0; i < 32; ++i) {
        const Point z{{rng.normal(), rng.normal()}};
        const auto a = eval_basis(basis, z);
        const auto b = eval_basis(back, z);
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a[j] - b[j]) < 1e-14);
    }
}

TEST_CASE("mix_family by a unitary keeps Gamma invariant") {
    const BasisFamily basis = monomial_basis(1, 3);
    const std::size_t d = basis.dimension();
    // random unitary via Gram-Schmidt of a random complex matrix
    TrialRng rng(31, {7});
    std::vector<std::vector<Complex>> u(d, std::vector<Complex>(d));
    for (auto& row : u)
        for (Complex& x : row) x = rng.complex_normal();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            Complex proj = 0.0;
            for (std::size_t j = 0; j < d; ++j) proj += u[i][j] * std::conj(u[k][j]);
            for (std::size_t j = 0; j < d; ++j) u[i][j] -= proj * u[k][j];
        }
        double norm2 = 0.0;
        for (const Complex& x : u[i]) norm2 += std::norm(x);
        for (Complex& x : u[i]) x /= std::sqrt(norm2);
    }
    const BasisFamily mixed = mix_family(basis, u);
    for (int i = 0; i < 32; ++i) {
        const Point z{{rng.normal(), rng.normal()}};
        CHECK(bergman_gamma(mixed, z) ==
              doctest::Approx(bergman_gamma(basis, z)).epsilon(1e-10));
    }
}
