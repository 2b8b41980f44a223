#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/parallel.hpp"
#include "tdis/rng.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

/* One discrete-time SI run. The seed is infected before any contact; a
 * contact (u, v, t) transmits from an endpoint infected strictly before t
 * (seed sentinel -1) to a susceptible endpoint with probability beta. A node
 * infected at step t therefore never relays through another contact at the
 * same step, mirroring the fastest-arrival path rule, so at beta = 1 the
 * infected set is exactly the seed plus its temporally reachable nodes. */
inline double si_run(const temporal_network& g, node_t seed_node, double beta, rng_t& rng)
{
    if (seed_node < 0 || seed_node >= g.n_nodes)
        throw std::invalid_argument("seed index out of range");
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("infection probability outside [0, 1]");

    constexpr time_t never = std::numeric_limits<time_t>::max();
    std::vector<time_t> infected_at(static_cast<std::size_t>(g.n_nodes), never);
    infected_at[static_cast<std::size_t>(seed_node)] = -1;
    std::size_t n_infected = 1;

    for (const auto& c : g.contacts) {
        const auto u = static_cast<std::size_t>(c.u);
        const auto v = static_cast<std::size_t>(c.v);
        const bool u_can = infected_at[u] < c.t;
        const bool v_can = !g.directed && infected_at[v] < c.t;
        if (u_can && infected_at[v] == never) {
            if (beta >= 1.0 || rng.bernoulli(beta)) {
                infected_at[v] = c.t;
                ++n_infected;
            }
        } else if (v_can && infected_at[u] == never) {
            if (beta >= 1.0 || rng.bernoulli(beta)) {
                infected_at[u] = c.t;
                ++n_infected;
            }
        }
    }
    return static_cast<double>(n_infected) / static_cast<double>(g.n_nodes);
}

struct spread_result {
    std::vector<double> per_seed_fraction; // I_i, indexed by seed node
    double mean_fraction = 0.0;            // <I>
    double std_fraction = 0.0;
    double beta = 0.0;
    int runs = 1;
};

/* Spreadability: final infected fraction averaged over every seed choice,
 * each seed averaged over `runs` stochastic repetitions. Every (seed, run)
 * gets its own derived stream, so the result does not depend on the worker
 * count; beta = 1 is deterministic and forces runs = 1. */
inline spread_result spreadability(const temporal_network& g, double beta, int runs,
                                   std::uint64_t master_seed, unsigned workers = 1)
{
    if (runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    if (beta >= 1.0)
        runs = 1;

    const auto n = static_cast<std::size_t>(g.n_nodes);
    spread_result r;
    r.beta = beta;
    r.runs = runs;
    r.per_seed_fraction.assign(n, 0.0);
    parallel_for(n, workers, [&](std::size_t i) {
        double acc = 0.0;
        for (int run = 0; run < runs; ++run) {
            rng_t rng(derive_seed(master_seed, i, static_cast<std::uint64_t>(run)));
            acc += si_run(g, static_cast<node_t>(i), beta, rng);
        }
        r.per_seed_fraction[i] = acc / static_cast<double>(runs);
    });

    double mean = 0.0;
    for (const double x : r.per_seed_fraction)
        mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const double x : r.per_seed_fraction)
        var += (x - mean) * (x - mean);
    r.mean_fraction = mean;
    r.std_fraction = std::sqrt(var / static_cast<double>(n));
    return r;
}

inline double delta_spreadability(const temporal_network& g1, const temporal_network& g2,
                                  double beta, int runs, std::uint64_t master_seed,
                                  unsigned workers = 1)
{
    const double i1 = spreadability(g1, beta, runs, derive_seed(master_seed, 1), workers)
                          .mean_fraction;
    const double i2 = spreadability(g2, beta, runs, derive_seed(master_seed, 2), workers)
                          .mean_fraction;
    return std::abs(i1 - i2);
}

// product-moment correlation
inline double pearson(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size())
        throw std::invalid_argument("length mismatch");
    const std::size_t n = xs.size();
    if (n < 3)
        throw std::invalid_argument("need at least three points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw numeric_error("zero variance");
    return sxy / std::sqrt(sxx * syy);
}

// rank correlation with average ranks for ties
inline double spearman(std::span<const double> xs, std::span<const double> ys)
{
    auto ranks = [](std::span<const double> v) {
        const std::size_t n = v.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> r(n, 0.0);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && v[order[j + 1]] == v[order[i]])
                ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k)
                r[order[k]] = avg;
            i = j + 1;
        }
        return r;
    };
    const auto rx = ranks(xs);
    const auto ry = ranks(ys);
    return pearson(rx, ry);
}

} // namespace tdis
