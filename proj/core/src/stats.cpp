#include "plurizero/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plurizero {

namespace {

double pairwise_sum_range(std::span<const double> v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum_range(v, lo, mid) + pairwise_sum_range(v, mid, hi);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return pairwise_sum_range(values, 0, values.size());
}

MeanSE mean_se(std::span<const double> values) {
    MeanSE out;
    out.count = values.size();
    if (values.empty()) return out;
    out.mean = pairwise_sum(values) / static_cast<double>(values.size());
    if (values.size() < 2) return out;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - out.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(values.size() - 1);
    out.se = std::sqrt(var / static_cast<double>(values.size()));
    return out;
}

VarianceEstimate sample_variance(std::span<const double> values) {
    VarianceEstimate out;
    const std::size_t n = values.size();
    out.count = n;
    if (n < 2) return out;
    const double mean = pairwise_sum(values) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double ss = pairwise_sum(sq);
    out.variance = ss / static_cast<double>(n - 1);
    if (n < 3) return out;
    // Leave-one-out variances from the centered sums; jackknife SE over them.
    std::vector<double> loo(n);
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - mean;
        // sum of squares about the leave-one-out mean
        const double ss_i = ss - d * d - (d * d) / (nn - 1.0);
        loo[i] = ss_i / (nn - 2.0);
    }
    const double loo_mean = pairwise_sum(loo) / nn;
    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = loo[i] - loo_mean;
        dev[i] = d * d;
    }
    out.se_jackknife = std::sqrt((nn - 1.0) / nn * pairwise_sum(dev));
    return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 points of equal length");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x values");
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    if (x.size() > 2) {
        const double ss_res = std::max(0.0, syy - out.slope * sxy);
        out.slope_se = std::sqrt(ss_res / (n - 2.0) / sxx);
    }
    return out;
}

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_test_cdf(std::span<const double> sorted_samples, std::span<const double> cdf_at_samples) {
    const std::size_t n = sorted_samples.size();
    if (n == 0 || cdf_at_samples.size() != n)
        throw std::invalid_argument("ks_test_cdf: bad input sizes");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, std::abs(cdf_at_samples[i] - lo), std::abs(cdf_at_samples[i] - hi)});
    }
    const double sn = std::sqrt(static_cast<double>(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

double ks_test_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_test_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
}

}  // namespace plurizero
