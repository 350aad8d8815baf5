#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lpp {

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
    double half_width() const { return (hi - lo) / 2.0; }
};

WilsonInterval wilson_interval(std::int64_t k, std::int64_t n, double z = 1.959963984540054);

// Bernoulli estimate over the valid trials of a run.
struct EstimateRecord {
    std::int64_t n = 0;  // valid trials
    std::int64_t k = 0;  // successes
    std::int64_t invalid = 0;
    double p_hat = 0.0;
    WilsonInterval ci;
};

EstimateRecord estimate(std::int64_t k, std::int64_t n, std::int64_t invalid = 0);

// Two-sided one-sample KS against U(0,1); transform through the model CDF first.
double ks_statistic_uniform(std::vector<double> samples);
double ks_statistic_exponential(std::span<const double> samples, double rate);
// Asymptotic p-value with Stephens' small-sample correction.
double ks_pvalue(double d, std::size_t n);

struct SampleMoments {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double stderr_mean = 0.0;
};

SampleMoments sample_moments(std::span<const double> xs);

// Pearson correlation of paired samples.
double correlation(std::span<const double> xs, std::span<const double> ys);

// Weighted least-squares line fit y = intercept + slope * x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    std::size_t used = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y, std::span<const double> sigma = {});

// Slope of ln(failure probability) against ln(delta).  Probabilities outside
// (0,1) are dropped with a note; fewer than 3 usable points is an error.
// Optional per-point standard deviations of the failure probabilities are
// propagated onto the log scale as weights.
struct ExponentFit {
    double slope = 0.0;
    double stderr_ = 0.0;
    std::size_t used = 0;
    std::vector<std::size_t> dropped;
};

ExponentFit fit_exponent(std::span<const double> deltas, std::span<const double> failure_probs,
                         std::span<const double> failure_sds = {});

}  // namespace lpp
