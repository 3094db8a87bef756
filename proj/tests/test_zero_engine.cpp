#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "plurizero/errors.hpp"
#include "plurizero/rng.hpp"
#include "plurizero/zero_engine.hpp"
#include "oracles.hpp"

using namespace plurizero;

namespace {

std::vector<Complex> sorted_roots(const ZeroSample& sample) {
    std::vector<Complex> flat;
    for (std::size_t i = 0; i < sample.points.size(); ++i)
        for (int k = 0; k < sample.multiplicities[i]; ++k) flat.push_back(sample.points[i][0]);
    std::sort(flat.begin(), flat.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return flat;
}

double set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

Polynomial gaussian_poly(int degree, TrialRng& rng) {
    std::vector<Complex> c(degree + 1);
    for (Complex& x : c) x = rng.complex_normal();
    return Polynomial::from_dense(c);
}

}  // namespace

TEST_CASE("roots of z^3 - 1 are the cube roots of unity") {
    const Polynomial p = Polynomial::from_dense({{-1.0, 0.0}, 0.0, 0.0, {1.0, 0.0}});
    const ZeroSample sample = roots_univariate(p);
    REQUIRE(sample.points.size() == 3);
    CHECK(sample.total_multiplicity() == 3);
    std::vector<Complex> expected;
    for (int k = 0; k < 3; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 3.0;
        expected.push_back({std::cos(t), std::sin(t)});
    }
    std::sort(expected.begin(), expected.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    CHECK(set_distance(sorted_roots(sample), expected) < 1e-12);
    for (int m : sample.multiplicities) CHECK(m == 1);
}

TEST_CASE("double root is clustered: (z - 2)^2") {
    const Polynomial p = Polynomial::from_dense({{4.0, 0.0}, {-4.0, 0.0}, {1.0, 0.0}});
    const ZeroSample sample = roots_univariate(p);
    REQUIRE(sample.points.size() == 1);
    CHECK(sample.multiplicities[0] == 2);
    CHECK(std::abs(sample.points[0][0] - Complex{2.0, 0.0}) < 1e-7);
}

TEST_CASE("random degree-50 polynomial: count and residual oracle") {
    TrialRng rng(99, {20});
    for (int rep = 0; rep < 5; ++rep) {
        const Polynomial p = gaussian_poly(50, rng);
        const ZeroSample sample = roots_univariate(p);
        CHECK(sample.total_multiplicity() == 50);
        CHECK(sample.residual <= 1e-8);
        // independent residual oracle at each root
        for (const Point& root : sample.points) {
            const double value = std::abs(p.eval(root));
            CHECK(value <= 1e-8 * p.coeff_norm1() * std::max(1.0, std::pow(std::abs(root[0]), 50)));
        }
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(roots_univariate(Polynomial::constant(1, 5.0)), RootFindingError);
    CHECK_THROWS_AS(roots_from_dense({{0.0, 0.0}}), RootFindingError);
    // leading trim drops negligible top coefficients
    const ZeroSample s = roots_from_dense({{-1.0, 0.0}, {1.0, 0.0}, {1e-20, 0.0}});
    CHECK(s.source_degree == 1);
    CHECK(s.total_multiplicity() == 1);
}

TEST_CASE("conjugation equivariance") {
    TrialRng rng(7, {21});
    const Polynomial p = gaussian_poly(12, rng);
    std::vector<Complex> conj_coeffs = p.dense1();
    for (Complex& c : conj_coeffs) c = std::conj(c);
    const ZeroSample base = roots_univariate(p);
    const ZeroSample conj = roots_from_dense(conj_coeffs);
    std::vector<Complex> base_roots = sorted_roots(base);
    std::vector<Complex> conj_roots = sorted_roots(conj);
    for (Complex& z : conj_roots) z = std::conj(z);
    std::sort(conj_roots.begin(), conj_roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    CHECK(set_distance(base_roots, conj_roots) < 1e-10);
}

TEST_CASE("scale invariance of the root set") {
    TrialRng rng(8, {22});
    const Polynomial p = gaussian_poly(15, rng);
    const ZeroSample base = roots_univariate(p);
    for (const double scale : {1e-6, 1e6}) {
        const ZeroSample scaled = roots_univariate(p * Complex{scale, 0.0});
        const double d = set_distance(sorted_roots(base), sorted_roots(scaled));
        CHECK(d < 1e-9 * 2.5);  // roots live within |z| <~ 2.5 here
    }
}

TEST_CASE("huge dynamic range coefficients (scaled evaluation path)") {
    // sqrt(binomial) coefficients at n = 300 span ~45 orders of magnitude
    const int n = 300;
    std::vector<Complex> c(n + 1);
    TrialRng rng(3, {23});
    for (int j = 0; j <= n; ++j) {
        const double lb = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                                 std::lgamma(n - j + 1.0));
        c[j] = rng.complex_normal() * std::exp(lb);
    }
    // the top coefficients are genuinely small relative to the middle ones;
    // disable the relative trim so the full degree is kept
    RootOptions options;
    options.trim_rel_tol = 0.0;
    const ZeroSample sample = roots_from_dense(c, options);
    CHECK(sample.total_multiplicity() == n);
    CHECK(sample.residual <= 1e-10);
}

TEST_CASE("solve_system_2d: hand-solved systems") {
    // p = xy - 1, q = x - y  ->  (1,1), (-1,-1)
    Polynomial p(2), q(2);
    p.set_coefficient(MultiIndex({1, 1}), 1.0);
    p.set_coefficient(MultiIndex({0, 0}), -1.0);
    q.set_coefficient(MultiIndex({1, 0}), 1.0);
    q.set_coefficient(MultiIndex({0, 1}), -1.0);
    const ZeroSample sample = solve_system_2d(p, q);
    REQUIRE(sample.points.size() == 2);
    CHECK(sample.total_multiplicity() == 2);
    std::vector<Complex> xs;
    for (const Point& pt : sample.points) {
        CHECK(std::abs(pt[0] - pt[1]) < 1e-9);  // on the line x = y
        xs.push_back(pt[0]);
    }
    std::sort(xs.begin(), xs.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(xs[0] - Complex{-1.0, 0.0}) < 1e-9);
    CHECK(std::abs(xs[1] - Complex{1.0, 0.0}) < 1e-9);

    // p = x^2 + y^2 - 1, q = y  ->  (+-1, 0)
    Polynomial circle(2), line(2);
    circle.set_coefficient(MultiIndex({2, 0}), 1.0);
    circle.set_coefficient(MultiIndex({0, 2}), 1.0);
    circle.set_coefficient(MultiIndex({0, 0}), -1.0);
    line.set_coefficient(MultiIndex({0, 1}), 1.0);
    const ZeroSample sample2 = solve_system_2d(circle, line);
    REQUIRE(sample2.points.size() == 2);
    for (const Point& pt : sample2.points) {
        CHECK(std::abs(pt[1]) < 1e-9);
        CHECK(std::abs(std::abs(pt[0].real()) - 1.0) < 1e-9);
    }
}

TEST_CASE("solve_system_2d: random cubics satisfy the Bezout count") {
    TrialRng rng(17, {24});
    int generic = 0;
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial p(2), q(2);
        for (const MultiIndex& idx : enumerate_multi_indices(2, 3)) {
            p.set_coefficient(idx, rng.complex_normal());
            q.set_coefficient(idx, rng.complex_normal());
        }
        const ZeroSample sample = solve_system_2d(p, q);
        if (sample.total_multiplicity() == 9) ++generic;
        CHECK(sample.residual <= 1e-7);
    }
    CHECK(generic >= 9);
}

TEST_CASE("solve_system_2d: positive-dimensional locus is an explicit error") {
    // q = 2p: common zero set is the whole curve
    Polynomial p(2);
    p.set_coefficient(MultiIndex({1, 1}), 1.0);
    p.set_coefficient(MultiIndex({0, 0}), -1.0);
    CHECK_THROWS_AS(solve_system_2d(p, p * Complex{2.0, 0.0}), NonGenericSystemError);
}

TEST_CASE("pairing_root_sum: normalized point masses") {
    const Polynomial p = Polynomial::from_dense({{-1.0, 0.0}, 0.0, 0.0, {1.0, 0.0}});
    const ZeroSample zeros = roots_univariate(p);
    // radial bump: all cube roots of unity sit at |z| = 1, equal values
    const TestForm phi({Complex{0.0, 0.0}}, 3.0, BumpProfile::smooth_bump);
    const double expected = phi.value({Complex{1.0, 0.0}});  // mass (1/3)*3 at radius 1
    CHECK(pairing_root_sum(zeros, phi).value == doctest::Approx(expected).epsilon(1e-12));

    // support away from all roots
    const TestForm far({Complex{5.0, 0.0}}, 1.0, BumpProfile::smooth_bump);
    CHECK(pairing_root_sum(zeros, far).value == 0.0);

    // codim mismatch is an explicit error
    ZeroSample fake = zeros;
    fake.codim = 2;
    CHECK_THROWS_AS(pairing_root_sum(fake, phi), DimensionMismatchError);
}

TEST_CASE("pairing_poincare_lelong: dd^c log|z| is the Dirac mass at 0") {
    const Polynomial f = Polynomial::from_dense({{0.0, 0.0}, {1.0, 0.0}});
    const TestForm phi({Complex{0.0, 0.0}}, 1.0, BumpProfile::smooth_bump);
    const CurrentPairing pl = pairing_poincare_lelong(f, phi, 1);
    CHECK(std::abs(pl.value - phi.value({Complex{0.0, 0.0}})) <= 2e-5);
    CHECK(!pl.warning);

    CHECK_THROWS_AS(pairing_poincare_lelong(Polynomial::constant(1, 2.0), phi, 0),
                    std::invalid_argument);
}

TEST_CASE("pairing_poincare_lelong: two-point mass against the root-sum oracle") {
    const Complex a{0.31, 0.12}, b{-0.42, 0.27};
    // f = (z - a)(z - b)
    const Polynomial f =
        Polynomial::from_dense({a * b, -(a + b), {1.0, 0.0}});
    const TestForm phi({Complex{0.0, 0.0}}, 2.0, BumpProfile::smooth_bump);
    const double oracle = 0.5 * (phi.value({a}) + phi.value({b}));
    const CurrentPairing pl = pairing_poincare_lelong(f, phi, 2, phi.radius() / 2048.0);
    CHECK(std::abs(pl.value - oracle) <= 1e-6);
}

TEST_CASE("dual-pairing identity on random polynomials") {
    TrialRng rng(23, {25});
    for (const int n : {5, 20}) {
        for (int rep = 0; rep < 10; ++rep) {
            const Polynomial f = gaussian_poly(n, rng);
            const TestForm phi({Complex{0.1, -0.1}}, 1.4, BumpProfile::smooth_bump);
            const double rs = pairing_root_sum(roots_univariate(f), phi).value;
            const double pl = pairing_poincare_lelong(f, phi, n).value;
            CHECK(std::abs(rs - pl) <= 1e-5 + 1e-4 * phi.c_phi() / n);
        }
    }
}

TEST_CASE("zero sample CSV export") {
    const Polynomial p = Polynomial::from_dense({{-1.0, 0.0}, {1.0, 0.0}});
    const ZeroSample zeros = roots_univariate(p);
    std::ostringstream out;
    zero_sample_to_csv(zeros, out);
    CHECK(out.str() == "re1,im1,multiplicity\n1,0,1\n");
}
