#include "lpp/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpp {

namespace {
void validate_input(const QueueInput& input, double w_init) {
    if (w_init < 0.0) throw std::invalid_argument("queue: w_init must be >= 0");
    if (input.services.size() != input.arrivals.size() + 1) {
        throw std::invalid_argument("queue: need services s_0..s_n for arrivals a_1..a_n");
    }
}

void validate_rates(double beta, double alpha) {
    if (!(beta > 0.0 && alpha < 1.0 && beta < alpha)) {
        throw std::invalid_argument("queue: rates must satisfy 0 < beta < alpha < 1");
    }
}
}  // namespace

std::vector<double> lindley_waits(const QueueInput& input, double w_init) {
    validate_input(input, w_init);
    const std::size_t n = input.arrivals.size();
    std::vector<double> w(n + 1);
    w[0] = w_init;
    for (std::size_t j = 1; j <= n; ++j) {
        w[j] = pos_part(w[j - 1] + input.services[j - 1] - input.arrivals[j - 1]);
    }
    return w;
}

QueueTrace departures(const QueueInput& input, double w_init) {
    validate_input(input, w_init);
    const std::size_t n = input.arrivals.size();
    QueueTrace t;
    t.waits.resize(n + 1);
    t.idles.resize(n);
    t.departures.resize(n);
    t.waits[0] = w_init;
    for (std::size_t j = 1; j <= n; ++j) {
        const double slack = t.waits[j - 1] + input.services[j - 1] - input.arrivals[j - 1];
        t.waits[j] = pos_part(slack);
        t.idles[j - 1] = neg_part(slack);
        t.departures[j - 1] = t.idles[j - 1] + input.services[j];
    }
    return t;
}

double cumulative_idle(const QueueInput& input, double w_init, std::size_t k, std::size_t l) {
    validate_input(input, w_init);
    if (k < 1 || k > l || l > input.arrivals.size()) throw std::domain_error("cumulative_idle: need 1 <= k <= l <= n");
    const QueueTrace t = departures(input, w_init);
    // (inf_{k<=i<=l} w_{k-1} + S^k_i)- with S^k_i = sum_{j=k}^i (s_{j-1} - a_j)
    double s = 0.0;
    double inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = k; i <= l; ++i) {
        s += input.services[i - 1] - input.arrivals[i - 1];
        inf = std::min(inf, t.waits[k - 1] + s);
    }
    const double via_inf = neg_part(inf);
    double direct = 0.0;
    for (std::size_t i = k; i <= l; ++i) direct += t.idles[i - 1];
    const double scale = std::max({1.0, via_inf, direct});
    if (std::abs(via_inf - direct) > 1e-9 * scale) {
        throw std::logic_error("cumulative_idle: running-infimum identity violated");
    }
    return via_inf;
}

double sample_stationary_wait(const RngStream& stream, double beta, double alpha, std::uint64_t counter) {
    validate_rates(beta, alpha);
    const double u = stream.uniform(2 * counter);
    if (u < 1.0 - beta / alpha) return 0.0;
    return stream.exponential(alpha - beta, 2 * counter + 1);
}

CoupledIncrementPair sample_stationary_pair(const RngStream& stream, double beta, double alpha, std::size_t n) {
    validate_rates(beta, alpha);
    if (n == 0) throw std::invalid_argument("sample_stationary_pair: n must be >= 1");
    const RngStream sa = stream.derive("arr");
    const RngStream ss = stream.derive("svc");
    QueueInput input;
    input.beta = beta;
    input.alpha = alpha;
    input.arrivals.resize(n);
    input.services.resize(n + 1);
    for (std::size_t j = 0; j < n; ++j) input.arrivals[j] = sa.exponential(beta, j);
    for (std::size_t j = 0; j <= n; ++j) input.services[j] = ss.exponential(alpha, j);
    const double w0 = sample_stationary_wait(stream.derive("winit"), beta, alpha);
    const QueueTrace t = departures(input, w0);

    CoupledIncrementPair pair;
    pair.beta = beta;
    pair.alpha = alpha;
    pair.upper = t.departures;
    pair.lower.assign(input.services.begin() + 1, input.services.end());
    pair.idles = t.idles;
    return pair;
}

bool indicator_agree_prefix(const CoupledIncrementPair& pair, std::size_t m) {
    if (m >= pair.size()) throw std::out_of_range("indicator_agree_prefix: m beyond pair length");
    for (std::size_t i = 0; i <= m; ++i) {
        if (pair.idles[i] != 0.0) return false;
    }
    return true;
}

std::vector<double> b_field(const PassageTable& table, std::span<const BEdge> edges) {
    std::vector<double> out;
    out.reserve(edges.size());
    for (const BEdge& e : edges) {
        const Point to = e.step_e2 ? e.from + e2 : e.from + e1;
        if (!table.region.contains(e.from) || !table.region.contains(to)) {
            throw std::out_of_range("b_field: edge outside table region");
        }
        out.push_back(table.value_at(to) - table.value_at(e.from));
    }
    return out;
}

double lemma59_lower_bound(double m, double r, double n, double theta) {
    if (!(m >= 1.0)) throw std::invalid_argument("lemma59_lower_bound: m must be >= 1");
    const double rn = r * std::pow(n, -1.0 / 3.0);
    const double rho_plus = 0.5 + rn;
    if (!(theta > 0.0 && theta < rho_plus)) {
        throw std::invalid_argument("lemma59_lower_bound: need 0 < theta < rho+");
    }
    const double denom = 0.25 - (rn * rn + 2.0 * rn * theta + theta * theta);
    if (!(denom > 0.0)) throw std::invalid_argument("lemma59_lower_bound: bracket denominator must be positive");
    const double bracket = 1.0 + (2.0 * rn * theta + theta * theta) / denom;
    const double first = 2.0 * rn / rho_plus;
    const double ratio = (0.5 - rn) / rho_plus;
    const double last = 1.0 / (1.0 + 2.0 * theta * std::pow(n, 1.0 / 3.0) / r);
    return 1.0 - first + ratio * std::pow(bracket, m) * last;
}

}  // namespace lpp
