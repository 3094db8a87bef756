#ifndef PLURIZERO_STATS_HPP
#define PLURIZERO_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace plurizero {

/// Pairwise (cascade) summation. Deterministic for a fixed element order, so
/// parallel producers that write into index slots give scheduler-independent
/// totals.
double pairwise_sum(std::span<const double> values);

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
    std::size_t count = 0;
};

MeanSE mean_se(std::span<const double> values);

struct VarianceEstimate {
    double variance = 0.0;      // unbiased sample variance
    double se_jackknife = 0.0;  // leave-one-out SE of the variance estimate
    std::size_t count = 0;
};

VarianceEstimate sample_variance(std::span<const double> values);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
};

/// Least squares y = a + b x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Asymptotic Kolmogorov distribution Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov test of sorted data against cdf values
/// (cdf evaluated at the sorted sample). Returns the p-value.
double ks_test_cdf(std::span<const double> sorted_samples, std::span<const double> cdf_at_samples);

/// Two-sample Kolmogorov-Smirnov p-value.
double ks_test_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace plurizero

#endif
