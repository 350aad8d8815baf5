#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpp/passage.hpp"
#include "lpp/rng.hpp"

namespace lpp {

// Module-wide sign conventions: (x)+ = max(x,0), (x)- = max(-x,0).
inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }
inline double neg_part(double x) { return x < 0.0 ? -x : 0.0; }

// Single-server queue input: inter-arrival times a_j (rate beta) and service
// times s_j (rate alpha).  Stationary use requires beta < alpha.
// Indexing: arrivals[j-1] = a_j and services[j] = s_j for j = 1..n, with
// services[0] = s_0 feeding the first waiting-time update.
struct QueueInput {
    std::vector<double> arrivals;  // a_1..a_n
    std::vector<double> services;  // s_0..s_n
    double beta = 0.0;
    double alpha = 0.0;
};

struct QueueTrace {
    std::vector<double> waits;       // w_0..w_n (w_0 = initial condition)
    std::vector<double> idles;       // e_1..e_n
    std::vector<double> departures;  // d_1..d_n
};

// Lindley recursion w_j = (w_{j-1} + s_{j-1} - a_j)+ forward from w_init.
std::vector<double> lindley_waits(const QueueInput& input, double w_init);

// Full trace: e_j = (w_{j-1} + s_{j-1} - a_j)-, d_j = e_j + s_j.
QueueTrace departures(const QueueInput& input, double w_init);

// Cumulative idle time over [k,l] (1-based customer indices) via the running
// infimum identity; asserts agreement with direct summation of the trace.
double cumulative_idle(const QueueInput& input, double w_init, std::size_t k, std::size_t l);

// Stationary waiting time: atom of mass 1 - beta/alpha at 0, else Exp(alpha-beta).
double sample_stationary_wait(const RngStream& stream, double beta, double alpha, std::uint64_t counter = 0);

// Two coupled stationary increment sequences: upper = inter-departures
// (marginal Exp(beta)), lower = services (marginal Exp(alpha)), beta < alpha.
// upper >= lower entrywise with equality exactly where the idle time vanishes.
struct CoupledIncrementPair {
    std::vector<double> upper;
    std::vector<double> lower;
    std::vector<double> idles;  // upper[i] - lower[i], kept for exact equality tests
    double beta = 0.0;
    double alpha = 0.0;

    std::size_t size() const { return upper.size(); }
};

CoupledIncrementPair sample_stationary_pair(const RngStream& stream, double beta, double alpha, std::size_t n);

// True iff the two sequences agree on entries 0..m.  Agreement is structural
// (zero idle time), never a float comparison of independently computed sums.
bool indicator_agree_prefix(const CoupledIncrementPair& pair, std::size_t m);

// Passage-increment field B_{x,x+e_k} = G(x+e_k) - G(x).
struct BEdge {
    Point from;
    bool step_e2 = false;
};

std::vector<double> b_field(const PassageTable& table, std::span<const BEdge> edges);

// Right side of the promised prefix-agreement lower bound, evaluated exactly
// as stated (rho+ = 1/2 + r N^{-1/3}, tuning parameter 0 < theta < rho+).
double lemma59_lower_bound(double m, double r, double n, double theta);

}  // namespace lpp
