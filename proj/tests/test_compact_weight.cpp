#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plurizero/errors.hpp"
#include "plurizero/extremal.hpp"
#include "plurizero/rng.hpp"
#include "plurizero/test_form.hpp"
#include "oracles.hpp"

using namespace plurizero;

TEST_CASE("extremal_analytic closed forms") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    CHECK(extremal_analytic(disk, {{2.0, 0.0}}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(extremal_analytic(disk, {{0.5, 0.0}}) == 0.0);

    const WeightedCompact interval = WeightedCompact::interval();
    CHECK(extremal_analytic(interval, {{1.0, 0.0}}) == doctest::Approx(0.0).epsilon(1e-12));
    // V(2) = log(2 + sqrt(3))
    CHECK(extremal_analytic(interval, {{2.0, 0.0}}) ==
          doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));

    const WeightedCompact polydisk = WeightedCompact::polydisk();
    CHECK(extremal_analytic(polydisk, {{3.0, 0.0}, {0.5, 0.0}}) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));

    const WeightedCompact ball = WeightedCompact::unit_ball();
    CHECK(extremal_analytic(ball, {{3.0, 0.0}, {4.0, 0.0}}) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-14));

    const Weight q = Weight::parse("0.5*r2", 1);
    CHECK_THROWS_AS(extremal_analytic(WeightedCompact::unit_disk(q), {{2.0, 0.0}}),
                    NoClosedFormError);
}

TEST_CASE("disk green function agrees with the polynomial sup formula oracle") {
    // sup over sup-normalized monomials of (1/deg) log |p(z)|, degrees <= 200
    const Complex z{2.0, 0.0};
    double sup = -1e300;
    for (int n = 1; n <= 200; ++n) {
        for (int j = 1; j <= n; ++j)
            sup = std::max(sup, std::log(std::pow(std::abs(z), j)) / n);
    }
    CHECK(sup == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(extremal_analytic(WeightedCompact::unit_disk(), {z}) ==
          doctest::Approx(sup).epsilon(1e-12));
}

TEST_CASE("extremal_analytic vanishes on K and is positive outside") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const WeightedCompact interval = WeightedCompact::interval();
    const WeightedCompact ball = WeightedCompact::unit_ball();
    TrialRng rng(3, {10});
    for (int i = 0; i < 256; ++i) {
        const Complex in_disk = oracles::random_in_disk(rng, 1.0);
        CHECK(extremal_analytic(disk, {in_disk}) == 0.0);
        const double x = 2.0 * rng.uniform() - 1.0;
        CHECK(extremal_analytic(interval, {{x, 0.0}}) <= 1e-12);
        const Complex z1 = oracles::random_in_disk(rng, 0.7);
        const Complex z2 = oracles::random_in_disk(rng, 0.7);
        if (std::norm(z1) + std::norm(z2) <= 1.0)
            CHECK(extremal_analytic(ball, {z1, z2}) == 0.0);

        const double angle = rng.uniform() * 2.0 * std::numbers::pi;
        const Complex outside =
            (1.1 + 3.0 * rng.uniform()) * Complex{std::cos(angle), std::sin(angle)};
        CHECK(extremal_analytic(disk, {outside}) > 0.0);
        CHECK(extremal_analytic(interval, {outside}) > 0.0);
    }
}

TEST_CASE("Lelong class: V - log|z| stays bounded far away") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const WeightedCompact interval = WeightedCompact::interval();
    for (const double r : {1e3, 1e6}) {
        for (const double arg : {0.3, 2.1, 4.0}) {
            const Complex z = r * Complex{std::cos(arg), std::sin(arg)};
            CHECK(std::abs(extremal_analytic(disk, {z}) - std::log(r)) <= 1e-9);
            // interval: the gap tends to log 2 from either side
            CHECK(std::abs(extremal_analytic(interval, {z}) - std::log(r)) <= 0.70);
        }
    }
}

TEST_CASE("extremal_numeric approaches the disk green function") {
    const WeightedCompact circle = WeightedCompact::circle();
    const int n = 100;
    const BasisFamily basis =
        build_orthonormal_basis(circle.quadrature_for_degree(n), circle.weight(), n);
    const double approx = extremal_numeric(circle, n, basis, {{2.0, 0.0}});
    CHECK(std::abs(approx - std::log(2.0)) <= 0.02);

    // interior bound (1/2n) log d_n at z = 0
    CHECK(extremal_numeric(circle, n, basis, {{0.0, 0.0}}) <=
          std::log(static_cast<double>(space_dimension(1, n))) / (2.0 * n) + 1e-12);

    // refinement: the error at z = 3 decreases from n = 25 to n = 100
    const BasisFamily b25 =
        build_orthonormal_basis(circle.quadrature_for_degree(25), circle.weight(), 25);
    const double e25 = std::abs(extremal_numeric(circle, 25, b25, {{3.0, 0.0}}) - std::log(3.0));
    const double e100_at3 =
        std::abs(extremal_numeric(circle, n, basis, {{3.0, 0.0}}) - std::log(3.0));
    CHECK(e100_at3 < e25);
}

TEST_CASE("bound chain: numeric extremal <= (1/2n) log d_n + analytic") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    TrialRng rng(41, {11});
    for (const int n : {25, 50, 100}) {
        const BasisFamily basis = monomial_basis(1, n);  // sup 1 on the disk
        for (int i = 0; i < 64; ++i) {
            const Complex z = oracles::random_in_disk(rng, 2.5);
            const double numeric = extremal_numeric(disk, n, basis, {z});
            const double bound = std::log(static_cast<double>(space_dimension(1, n))) /
                                     (2.0 * n) +
                                 extremal_analytic(disk, {z});
            CHECK(numeric <= bound + 1e-10);
        }
    }
}

TEST_CASE("test form profiles, stencil agreement, and the exactness of dd^c") {
    for (const BumpProfile profile : {BumpProfile::smooth_bump, BumpProfile::polynomial_bump}) {
        const TestForm phi({Complex{0.3, -0.2}}, 1.25, profile);
        CHECK(phi.value(phi.center()) == doctest::Approx(1.0));
        CHECK(phi.value({Complex{0.3, -0.2} + Complex{1.25, 0.0}}) == 0.0);

        // analytic Laplacian vs the 5-point stencil
        const double h = phi.default_spacing() / 4.0;
        TrialRng rng(13, {12});
        for (int i = 0; i < 100; ++i) {
            const Complex z = Complex{0.3, -0.2} + oracles::random_in_disk(rng, 1.15);
            double fd = -4.0 * phi.value({z});
            for (const Complex step : {Complex{h, 0.0}, Complex{-h, 0.0}, Complex{0.0, h},
                                       Complex{0.0, -h}})
                fd += phi.value({z + step});
            fd /= h * h * 2.0 * std::numbers::pi;
            CHECK(std::abs(fd - phi.ddc_density({z})) <=
                  5e-3 * (1.0 + std::abs(phi.ddc_density({z}))));
        }

        // discrete exactness: the stencil grid telescopes to ~0, and the
        // analytic grid integrates dd^c phi to ~0 as well
        const DdcGrid stencil = phi.make_ddc_grid(phi.default_spacing(), true);
        CHECK(std::abs(stencil.total()) <= 1e-6 * phi.c_phi());
        CHECK(std::abs(phi.ddc_grid().total()) <= 1e-6 * phi.c_phi());
    }
}

TEST_CASE("c_phi scaling, positivity, and refinement stability") {
    const TestForm phi({Complex{0.0, 0.0}}, 1.0, BumpProfile::smooth_bump);
    CHECK(phi.c_phi() > 0.0);

    const TestForm doubled({Complex{0.0, 0.0}}, 1.0, BumpProfile::smooth_bump, 2.0);
    CHECK(doubled.c_phi() == doctest::Approx(2.0 * phi.c_phi()).epsilon(1e-12));

    const TestForm zero({Complex{0.0, 0.0}}, 1.0, BumpProfile::smooth_bump, 0.0);
    CHECK(zero.c_phi() == 0.0);

    // stability under grid refinement to 1e-3 (relative)
    const DdcGrid fine = phi.make_ddc_grid(phi.default_spacing() / 2.0, false);
    double sup_fine = 0.0;
    const double cell = std::pow(phi.default_spacing() / 2.0, 2.0);
    for (double w : fine.weights) sup_fine = std::max(sup_fine, std::abs(w) / cell);
    const double c_fine = sup_fine * std::numbers::pi;
    CHECK(std::abs(c_fine - phi.c_phi()) <= 1e-3 * phi.c_phi());
}

TEST_CASE("equilibrium_pairing against the disk equilibrium measure") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const ExtremalFunction V = ExtremalFunction::analytic(disk);

    // bump supported inside the disk misses the equilibrium measure entirely
    const TestForm inner({Complex{0.0, 0.0}}, 0.5, BumpProfile::smooth_bump);
    CHECK(std::abs(equilibrium_pairing(V, inner)) <= 1e-12);

    // radial bump covering the closed disk: pairing = circle average of phi
    const TestForm wide({Complex{0.0, 0.0}}, 1.5, BumpProfile::smooth_bump);
    const double target = oracles::circle_average([&](Complex z) { return wide.value({z}); });
    CHECK(std::abs(equilibrium_pairing(V, wide) - target) <= 1e-3);

    // off-center bump: still the circle average
    const TestForm off({Complex{0.5, 0.1}}, 0.9, BumpProfile::smooth_bump);
    const double target_off = oracles::circle_average([&](Complex z) { return off.value({z}); });
    CHECK(std::abs(equilibrium_pairing(V, off) - target_off) <= 1e-3);

    // refinement check flag
    const QuadPairing checked = equilibrium_pairing_checked(V, wide, 1e-3);
    CHECK(!checked.warning);
}

TEST_CASE("equilibrium_pairing for the interval matches the arcsine average") {
    const WeightedCompact interval = WeightedCompact::interval();
    const ExtremalFunction V = ExtremalFunction::analytic(interval);
    const TestForm phi({Complex{0.2, 0.0}}, 1.6, BumpProfile::smooth_bump);
    const double target =
        oracles::arcsine_average([&](double x) { return phi.value({Complex{x, 0.0}}); });
    CHECK(std::abs(equilibrium_pairing(V, phi) - target) <= 2e-3);
}

TEST_CASE("pairing is consistent with an independent offset quadrature") {
    const WeightedCompact disk = WeightedCompact::unit_disk();
    const ExtremalFunction V = ExtremalFunction::analytic(disk);
    const TestForm phi({Complex{0.4, 0.3}}, 1.1, BumpProfile::polynomial_bump);
    const double reference = oracles::pairing_reference(
        [&](Complex z) { return extremal_analytic(disk, {z}); }, phi, phi.radius() / 192.0);
    CHECK(std::abs(equilibrium_pairing(V, phi) - reference) <= 1e-3);
}

TEST_CASE("weight expressions parse, evaluate, and reject bad input") {
    const Weight q = Weight::parse("0.5*r2 - 0.25*re^2 + im", 1);
    const Point z{{2.0, 3.0}};  // r2 = 13, re = 2, im = 3
    CHECK(q(z) == doctest::Approx(0.5 * 13.0 - 0.25 * 4.0 + 3.0).epsilon(1e-14));
    CHECK(!q.is_zero());
    CHECK(Weight::parse("0", 1).is_zero());

    const Weight q2 = Weight::parse("r2^2 + re1*im2", 2);
    const Point w{{1.0, 2.0}, {3.0, -1.0}};  // r2 = 15
    CHECK(q2(w) == doctest::Approx(225.0 - 1.0).epsilon(1e-14));

    CHECK_THROWS_AS(Weight::parse("re2", 1), std::invalid_argument);
    CHECK_THROWS_AS(Weight::parse("2 +* r2", 1), std::invalid_argument);
    CHECK_THROWS_AS(Weight::parse("bogus", 1), std::invalid_argument);
}

TEST_CASE("weighted sup estimation covers the interior when weighted") {
    // |z| e^{3 re(z)} over the closed unit disk peaks at z = 1 with value e^3
    const Weight q = Weight::parse("0 - re", 1);
    const WeightedCompact disk = WeightedCompact::unit_disk(q);
    const Polynomial z_poly = Polynomial::monomial(MultiIndex({1}));
    CHECK(disk.weighted_sup(z_poly, 3) == doctest::Approx(std::exp(3.0)).epsilon(1e-3));
}

TEST_CASE("m = 2 test form: analytic 4D Laplacian matches the 9-point stencil") {
    const TestForm phi({Complex{0.0, 0.0}, Complex{0.0, 0.0}}, 1.0,
                       BumpProfile::polynomial_bump);
    const double h = 1.0 / 64.0;
    TrialRng rng(19, {13});
    for (int i = 0; i < 40; ++i) {
        Point z{oracles::random_in_disk(rng, 0.6), oracles::random_in_disk(rng, 0.6)};
        double fd = -8.0 * phi.value(z);
        for (int v = 0; v < 2; ++v) {
            for (const Complex step : {Complex{h, 0.0}, Complex{-h, 0.0}, Complex{0.0, h},
                                       Complex{0.0, -h}}) {
                Point w = z;
                w[v] += step;
                fd += phi.value(w);
            }
        }
        fd /= h * h * 2.0 * std::numbers::pi;
        CHECK(std::abs(fd - phi.ddc_density(z)) <= 5e-3 * (1.0 + std::abs(phi.ddc_density(z))));
    }
    CHECK(std::abs(phi.ddc_grid().total()) <= 1e-6 * phi.c_phi());
}
