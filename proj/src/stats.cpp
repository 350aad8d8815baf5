#include "lpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpp {

WilsonInterval wilson_interval(std::int64_t k, std::int64_t n, double z) {
    if (n <= 0 || k < 0 || k > n) throw std::invalid_argument("wilson_interval: need 0 <= k <= n, n > 0");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    WilsonInterval w;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

EstimateRecord estimate(std::int64_t k, std::int64_t n, std::int64_t invalid) {
    if (n < 1) throw std::invalid_argument("estimate: zero valid trials");
    EstimateRecord r;
    r.n = n;
    r.k = k;
    r.invalid = invalid;
    r.p_hat = static_cast<double>(k) / static_cast<double>(n);
    r.ci = wilson_interval(k, n);
    return r;
}

double ks_statistic_uniform(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic_uniform: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double fi = static_cast<double>(i);
        d = std::max(d, std::max((fi + 1.0) / n - samples[i], samples[i] - fi / n));
    }
    return d;
}

double ks_statistic_exponential(std::span<const double> samples, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("ks_statistic_exponential: rate must be positive");
    std::vector<double> u(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) u[i] = 1.0 - std::exp(-rate * samples[i]);
    return ks_statistic_uniform(std::move(u));
}

double ks_pvalue(double d, std::size_t n) {
    if (n == 0) throw std::invalid_argument("ks_pvalue: empty sample");
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = d * (sn + 0.12 + 0.11 / sn);
    double p = 0.0;
    for (int k = 1; k <= 128; ++k) {
        const double term = std::exp(-2.0 * lambda * lambda * k * k);
        p += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-14) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

SampleMoments sample_moments(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("sample_moments: empty sample");
    SampleMoments m;
    m.n = xs.size();
    double s = 0.0;
    for (double x : xs) s += x;
    m.mean = s / static_cast<double>(m.n);
    double v = 0.0;
    for (double x : xs) v += (x - m.mean) * (x - m.mean);
    m.variance = m.n > 1 ? v / static_cast<double>(m.n - 1) : 0.0;
    m.stderr_mean = std::sqrt(m.variance / static_cast<double>(m.n));
    return m;
}

double correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("correlation: bad sample sizes");
    const SampleMoments mx = sample_moments(xs);
    const SampleMoments my = sample_moments(ys);
    double c = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) c += (xs[i] - mx.mean) * (ys[i] - my.mean);
    c /= static_cast<double>(xs.size() - 1);
    return c / std::sqrt(mx.variance * my.variance);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y, std::span<const double> sigma) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 points");
    const bool weighted = !sigma.empty();
    if (weighted && sigma.size() != x.size()) throw std::invalid_argument("fit_line: sigma size mismatch");
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double w = weighted ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
        sw += w;
        swx += w * x[i];
        swy += w * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double w = weighted ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
        sxx += w * (x[i] - xbar) * (x[i] - xbar);
        sxy += w * (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.used = x.size();
    f.slope = sxy / sxx;
    f.intercept = ybar - f.slope * xbar;
    if (weighted) {
        f.slope_stderr = std::sqrt(1.0 / sxx);
    } else if (x.size() > 2) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (f.intercept + f.slope * x[i]);
            ssr += r * r;
        }
        f.slope_stderr = std::sqrt(ssr / static_cast<double>(x.size() - 2) / sxx);
    }
    return f;
}

ExponentFit fit_exponent(std::span<const double> deltas, std::span<const double> failure_probs,
                         std::span<const double> failure_sds) {
    if (deltas.size() != failure_probs.size()) throw std::invalid_argument("fit_exponent: size mismatch");
    ExponentFit out;
    std::vector<double> x, y, s;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double q = failure_probs[i];
        if (!(q > 0.0 && q < 1.0)) {
            out.dropped.push_back(i);
            continue;
        }
        x.push_back(std::log(deltas[i]));
        y.push_back(std::log(q));
        if (!failure_sds.empty()) s.push_back(failure_sds[i] / q);  // delta method on ln q
    }
    if (x.size() < 3) throw std::invalid_argument("fit_exponent: fewer than 3 usable grid points");
    const LineFit f = fit_line(x, y, s);
    out.slope = f.slope;
    out.stderr_ = f.slope_stderr;
    out.used = f.used;
    return out;
}

}  // namespace lpp
