#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plurizero/ensembles.hpp"
#include "plurizero/stats.hpp"

using namespace plurizero;

namespace {

Complex pair_with(const CoefficientVector& a, const CoefficientVector& v) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * v[j];
    return s;
}

CoefficientVector unit_vector(std::size_t dim, TrialRng& rng) {
    CoefficientVector v(dim);
    double n2 = 0.0;
    for (Complex& x : v) {
        x = rng.complex_normal();
        n2 += std::norm(x);
    }
    for (Complex& x : v) x /= std::sqrt(n2);
    return v;
}

}  // namespace

TEST_CASE("gaussian entries have unit second moment") {
    const CoefficientLaw law = CoefficientLaw::gaussian();
    TrialRng rng(5, {30});
    double acc = 0.0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const CoefficientVector a = law.sample(4, rng);
        for (const Complex& x : a) acc += std::norm(x);
    }
    CHECK(acc / (4.0 * trials) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("fubini-study pushforward: ||a||^2/(1+||a||^2) has the Beta(dim,1) law") {
    // from the normalized-sphere construction the statistic is the share of
    // squared norm in the last `dim` coordinates of a (dim+1)-sphere point,
    // which is Beta(dim, 1): cdf x^dim (uniform exactly when dim = 1)
    for (const std::size_t dim : {std::size_t{1}, std::size_t{2}}) {
        const CoefficientLaw law = CoefficientLaw::fubini_study();
        TrialRng rng(7, {31, dim});
        std::vector<double> samples;
        for (int t = 0; t < 20000; ++t) {
            const CoefficientVector a = law.sample(dim, rng);
            double n2 = 0.0;
            for (const Complex& x : a) n2 += std::norm(x);
            samples.push_back(n2 / (1.0 + n2));
        }
        std::sort(samples.begin(), samples.end());
        std::vector<double> cdf(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i)
            cdf[i] = std::pow(samples[i], static_cast<double>(dim));
        CHECK(ks_test_cdf(samples, cdf) > 0.01);
    }
}

TEST_CASE("heavy-tail law: construction, bounds, and tail certificate") {
    CHECK_THROWS_AS(CoefficientLaw::heavy_tail(2.0, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientLaw::heavy_tail(4.0, 0.0, 2), std::invalid_argument);

    const CoefficientLaw law = CoefficientLaw::heavy_tail(5.0, 0.0, 1);
    CHECK(law.gamma() == 5.0);
    CHECK(law.delta() > 0.0);
    CHECK(law.density_bound() > 0.0);

    // empirical tail against the certificate: P(log|a| > R) <= 1.1 delta/R^gamma
    TrialRng rng(11, {32});
    const int draws = 1000000;
    int over2 = 0, over4 = 0, over8 = 0;
    for (int t = 0; t < draws; ++t) {
        const double r = law.sample_radius(rng);
        const double lr = r > 0.0 ? std::log(r) : -1e300;
        if (lr > 2.0) ++over2;
        if (lr > 4.0) ++over4;
        if (lr > 8.0) ++over8;
    }
    const double delta = law.delta();
    CHECK(over2 <= 1.1 * delta / std::pow(2.0, 5.0) * draws);
    CHECK(over4 <= 1.1 * delta / std::pow(4.0, 5.0) * draws);
    CHECK(over8 <= 1.1 * delta / std::pow(8.0, 5.0) * draws);
}

TEST_CASE("heavy-tail planar density is bounded by its certificate N") {
    const CoefficientLaw law = CoefficientLaw::heavy_tail(5.0, 0.0, 1);
    const double c = law.density_bound();
    // density c/(1 + r^2 log(e+r)^6) <= c everywhere, = c at 0
    for (const double r : {0.0, 0.01, 0.1, 0.5, 1.0, 3.0}) {
        const double density = c / (1.0 + r * r * std::pow(std::log(std::numbers::e + r), 6.0));
        CHECK(density <= c + 1e-15);
    }
}

TEST_CASE("no law puts mass on a fixed hyperplane (MC: no exact zeros)") {
    TrialRng rng(13, {33});
    const CoefficientVector v = unit_vector(4, rng);
    for (const CoefficientLaw& law :
         {CoefficientLaw::gaussian(), CoefficientLaw::fubini_study(),
          CoefficientLaw::heavy_tail(5.0, 0.0, 1)}) {
        int zeros = 0;
        for (int t = 0; t < 1000000; ++t) {
            const CoefficientVector a = law.sample(4, rng);
            if (pair_with(a, v) == Complex{0.0, 0.0}) ++zeros;
        }
        CHECK(zeros == 0);
    }
}

TEST_CASE("sampling is reproducible per (seed, trial) and order-independent") {
    const CoefficientLaw law = CoefficientLaw::heavy_tail(5.0, 0.0, 1);
    auto draw = [&](std::uint64_t trial) {
        TrialRng rng(42, {100, trial});
        return law.sample(8, rng);
    };
    const CoefficientVector first = draw(3);
    const CoefficientVector again = draw(3);
    REQUIRE(first.size() == again.size());
    for (std::size_t j = 0; j < first.size(); ++j) CHECK(first[j] == again[j]);
    // drawing other trials in between does not disturb trial 3
    draw(1);
    draw(7);
    const CoefficientVector third = draw(3);
    for (std::size_t j = 0; j < first.size(); ++j) CHECK(first[j] == third[j]);
}

TEST_CASE("gaussian signed alpha=1 radial integral equals -euler_gamma/2") {
    const double expected = -0.5772156649015329 / 2.0;
    CHECK(std::abs(signed_log_moment(LawKind::gaussian) - expected) <= 1e-10);
}

TEST_CASE("fubini-study signed alpha=1 integral vanishes by r <-> 1/r symmetry") {
    CHECK(std::abs(signed_log_moment(LawKind::fubini_study)) <= 1e-8);
}

TEST_CASE("gaussian alpha=2 moment matches the digamma closed form") {
    // 2 int r (log r)^2 e^{-r^2} dr = (euler_gamma^2 + pi^2/6) / 4
    const double g = 0.5772156649015329;
    const double expected = (g * g + std::numbers::pi * std::numbers::pi / 6.0) / 4.0;
    CHECK(std::abs(radial_log_moment(LawKind::gaussian, 2.0) - expected) <= 1e-10);
}

TEST_CASE("moment quadrature is consistent with MC at alpha in {1,2,3}") {
    const CoefficientLaw law = CoefficientLaw::gaussian();
    TrialRng rng(17, {34});
    for (const double alpha : {1.0, 2.0, 3.0}) {
        const double quad = radial_log_moment(LawKind::gaussian, alpha);
        std::vector<double> values;
        const CoefficientVector v = unit_vector(6, rng);
        for (int t = 0; t < 40000; ++t) {
            const CoefficientVector a = law.sample(6, rng);
            const double mag = std::abs(pair_with(a, v));
            if (mag == 0.0) continue;
            values.push_back(std::pow(std::abs(std::log(mag)), alpha));
        }
        const MeanSE ms = mean_se(values);
        CHECK(std::abs(ms.mean - quad) <= 3.0 * ms.se);
    }
}

TEST_CASE("gaussian alpha=2 MC agrees across dimensions (unitary invariance)") {
    const CoefficientLaw law = CoefficientLaw::gaussian();
    const double quad = radial_log_moment(LawKind::gaussian, 2.0);
    for (const std::size_t dim : {std::size_t{2}, std::size_t{8}, std::size_t{32}}) {
        TrialRng rng(19, {35, dim});
        const CoefficientVector v = unit_vector(dim, rng);
        std::vector<double> values;
        for (int t = 0; t < 30000; ++t) {
            const CoefficientVector a = law.sample(dim, rng);
            const double mag = std::abs(pair_with(a, v));
            if (mag == 0.0) continue;
            values.push_back(std::pow(std::log(mag), 2.0));
        }
        const MeanSE ms = mean_se(values);
        CHECK(std::abs(ms.mean - quad) <= 3.0 * ms.se);
    }
}

TEST_CASE("unitary invariance: |<a, v>| distributions coincide across unit vectors") {
    const CoefficientLaw law = CoefficientLaw::gaussian();
    TrialRng vr(23, {36});
    std::vector<CoefficientVector> vs;
    for (int k = 0; k < 8; ++k) vs.push_back(unit_vector(8, vr));
    std::vector<std::vector<double>> samples(8);
    for (int k = 0; k < 8; ++k) {
        TrialRng rng(29, {37, static_cast<std::uint64_t>(k)});
        for (int t = 0; t < 100000; ++t) {
            const CoefficientVector a = law.sample(8, rng);
            samples[k].push_back(std::abs(pair_with(a, vs[k])));
        }
    }
    for (int k = 1; k < 8; ++k) {
        CHECK(ks_test_two_sample(samples[k - 1], samples[k]) > 0.01);
    }
}

TEST_CASE("moment_constant certificates") {
    const MomentCertificate gauss = moment_constant(CoefficientLaw::gaussian(), 2.0);
    CHECK(gauss.method == MomentMethod::closed_form_radial);
    CHECK(!gauss.dim_dependent);
    CHECK(gauss.d_at(10.0) == gauss.d_at(1000.0));

    const CoefficientLaw heavy = CoefficientLaw::heavy_tail(5.0, 0.0, 1);
    const MomentCertificate cert = moment_constant(heavy, 2.0);
    CHECK(cert.method == MomentMethod::monte_carlo_bound);
    CHECK(cert.dim_dependent);
    CHECK(cert.b_certified >= cert.b_estimate);
    CHECK(cert.d_at(100.0) > cert.d_at(10.0));
    // D_n = B d_n^{alpha/gamma} scaling
    CHECK(cert.d_at(100.0) / cert.d_at(10.0) ==
          doctest::Approx(std::pow(10.0, 2.0 / 5.0)).epsilon(1e-12));

    CHECK_THROWS_AS(moment_constant(heavy, 6.0), std::invalid_argument);  // alpha < gamma
}

TEST_CASE("empirical_moment_check passes for all three laws") {
    CHECK_THROWS_AS(
        empirical_moment_check(CoefficientLaw::gaussian(), 4, 2.0, 100, 1),
        std::invalid_argument);  // trials >= 10^4

    const MomentCheckReport gauss =
        empirical_moment_check(CoefficientLaw::gaussian(), 8, 2.0, 10000, 51, 32);
    CHECK(gauss.pass);
    CHECK(gauss.per_vector.size() == 32);

    // dimension independence for FS: dim 2 vs dim 16 agree with the same
    // radial certificate
    const MomentCheckReport fs2 =
        empirical_moment_check(CoefficientLaw::fubini_study(), 2, 2.0, 20000, 52, 8);
    const MomentCheckReport fs16 =
        empirical_moment_check(CoefficientLaw::fubini_study(), 16, 2.0, 20000, 53, 8);
    CHECK(fs2.pass);
    CHECK(fs16.pass);
    CHECK(std::abs(fs2.max_estimate - fs16.max_estimate) <=
          3.0 * (fs2.max_se + fs16.max_se));

    const MomentCheckReport heavy = empirical_moment_check(
        CoefficientLaw::heavy_tail(5.0, 0.0, 1), 8, 2.0, 10000, 54, 8);
    CHECK(heavy.pass);
}

TEST_CASE("summability audit") {
    const CoefficientLaw gauss = CoefficientLaw::gaussian();
    const MomentCertificate cert = moment_constant(gauss, 2.0);
    const SummabilityReport report = summability_audit(gauss, 2.0, 1, 2000, cert);
    CHECK(report.convergent);
    CHECK(report.fitted_tail_exponent == doctest::Approx(-2.0).epsilon(0.01));
    const double limit =
        std::pow(cert.d_value, 1.0) * std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(std::abs(report.partial_sums.back() - limit) <=
          std::pow(cert.d_value, 1.0) * 1.1 / 2000.0);

    const CoefficientLaw heavy = CoefficientLaw::heavy_tail(5.0, 0.0, 1);
    const MomentCertificate hcert = moment_constant(heavy, 2.0);
    const SummabilityReport hreport = summability_audit(heavy, 2.0, 1, 800, hcert);
    CHECK(hreport.convergent);
    // d_n = n+1 in one variable: fitted exponent ~ -2 + 2/gamma = -1.6
    CHECK(hreport.fitted_tail_exponent == doctest::Approx(-1.6).epsilon(0.03));
}
