#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <ostream>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/parallel.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

// sentinel for node pairs with no temporal path
inline constexpr std::int32_t unreachable = -1;

/* Hop-count matrix over ordered node pairs. Also holds BFS distances of a
 * static network, where the diameter plays the role of l_max. */
struct fad_matrix {
    node_t n_nodes = 0;
    std::vector<std::int32_t> dist; // row-major N x N, `unreachable` sentinel
    std::int32_t l_max = 0;         // max finite off-diagonal entry, 0 if none
    std::size_t reachable_pairs = 0;

    std::int32_t at(node_t i, node_t j) const
    {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_nodes) +
                    static_cast<std::size_t>(j)];
    }
};

namespace detail {

constexpr time_t never = std::numeric_limits<time_t>::max();
constexpr std::int32_t inf_hops = std::numeric_limits<std::int32_t>::max();

/* Forward scan over the time-sorted contact list. Per node we track
 *   arrival[x]   earliest arrival time (source sentinel -1, so contacts at
 *                t = 0 already relay from the source),
 *   best[x]      fewest contacts of any path arriving by the last committed
 *                time step,
 *   hops[x]      fewest contacts among paths arriving exactly at arrival[x]
 *                — the fastest-arrival distance.
 * A contact (u, v, t) relays only from an endpoint with arrival < t; updates
 * within one time step are committed after the whole step, so no relay chain
 * can traverse two contacts with equal timestamps. best[] keeps improving
 * after a node's first arrival because a shorter path that shows up later
 * still shortens downstream fastest-arrival paths. */
template <typename Visit>
void temporal_scan(const temporal_network& g, node_t source, Visit&& visit)
{
    const auto n = static_cast<std::size_t>(g.n_nodes);
    std::vector<time_t> arrival(n, never);
    std::vector<std::int32_t> best(n, inf_hops);
    std::vector<std::int32_t> hops(n, inf_hops);
    arrival[static_cast<std::size_t>(source)] = -1;
    best[static_cast<std::size_t>(source)] = 0;
    hops[static_cast<std::size_t>(source)] = 0;

    struct staged {
        node_t node;
        std::int32_t cand;
    };
    std::vector<staged> block;

    const auto& cs = g.contacts;
    std::size_t i = 0;
    while (i < cs.size()) {
        const time_t t = cs[i].t;
        block.clear();
        for (; i < cs.size() && cs[i].t == t; ++i) {
            const auto& c = cs[i];
            const auto u = static_cast<std::size_t>(c.u);
            const auto v = static_cast<std::size_t>(c.v);
            if (arrival[u] < t) // `never` is time_t max, always >= t
                block.push_back({c.v, best[u] + 1});
            if (!g.directed && arrival[v] < t)
                block.push_back({c.u, best[v] + 1});
        }
        for (const auto& s : block) {
            const auto x = static_cast<std::size_t>(s.node);
            if (arrival[x] == never) {
                arrival[x] = t;
                hops[x] = s.cand;
            } else if (arrival[x] == t && s.cand < hops[x]) {
                hops[x] = s.cand;
            }
            if (s.cand < best[x])
                best[x] = s.cand;
        }
    }
    visit(arrival, hops);
}

} // namespace detail

/* Fastest-arrival distances from one source: entry j is the minimum number of
 * contacts among temporal paths from `source` (departing at t >= 0) that reach
 * j at its earliest possible arrival time; `unreachable` if no path exists. */
inline std::vector<std::int32_t> fad_from_source(const temporal_network& g, node_t source)
{
    if (source < 0 || source >= g.n_nodes)
        throw std::invalid_argument("source index out of range");
    std::vector<std::int32_t> out(static_cast<std::size_t>(g.n_nodes), unreachable);
    detail::temporal_scan(g, source, [&](const auto&, const auto& hops) {
        for (std::size_t j = 0; j < out.size(); ++j)
            if (hops[j] != detail::inf_hops)
                out[j] = hops[j];
    });
    out[static_cast<std::size_t>(source)] = 0;
    return out;
}

/* Earliest arrival times (test hook for the monotonicity property); the
 * source reports -1, unreached nodes report time_t max. */
inline std::vector<time_t> arrival_times_from_source(const temporal_network& g, node_t source)
{
    if (source < 0 || source >= g.n_nodes)
        throw std::invalid_argument("source index out of range");
    std::vector<time_t> out;
    detail::temporal_scan(g, source, [&](const auto& arrival, const auto&) { out = arrival; });
    return out;
}

inline fad_matrix compute_fad(const temporal_network& g, unsigned workers = 1)
{
    if (g.n_nodes < 2)
        throw numeric_error("need at least two nodes to form node pairs");
    const auto n = static_cast<std::size_t>(g.n_nodes);
    fad_matrix f;
    f.n_nodes = g.n_nodes;
    f.dist.assign(n * n, unreachable);
    parallel_for(n, workers, [&](std::size_t i) {
        const auto row = fad_from_source(g, static_cast<node_t>(i));
        std::copy(row.begin(), row.end(), f.dist.begin() + static_cast<std::ptrdiff_t>(i * n));
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto d = f.dist[i * n + j];
            if (d != unreachable) {
                ++f.reachable_pairs;
                f.l_max = std::max(f.l_max, d);
            }
        }
    }
    return f;
}

/* Distribution over hop distances q = 1..support; when any pair of the
 * network is unreachable the last bin carries the unreachable mass (the
 * "distance" l_max + 1). */
struct distance_distribution {
    std::vector<double> probs; // probs[k] = mass at distance k+1
    bool has_unreachable_bin = false;

    std::size_t support_len() const { return probs.size(); }
};

namespace detail {

inline distance_distribution row_distribution(const fad_matrix& f, node_t i, bool with_unreachable)
{
    const auto n = static_cast<std::size_t>(f.n_nodes);
    distance_distribution d;
    d.has_unreachable_bin = with_unreachable;
    d.probs.assign(static_cast<std::size_t>(f.l_max) + (with_unreachable ? 1 : 0), 0.0);
    const double w = 1.0 / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == static_cast<std::size_t>(i))
            continue;
        const auto q = f.dist[static_cast<std::size_t>(i) * n + j];
        if (q == unreachable)
            d.probs.back() += w;
        else
            d.probs[static_cast<std::size_t>(q) - 1] += w;
    }
    return d;
}

} // namespace detail

// per-node distance distribution H_i; same support length for every node
inline distance_distribution node_distribution(const fad_matrix& f, node_t i)
{
    if (i < 0 || i >= f.n_nodes)
        throw std::invalid_argument("node index out of range");
    const auto n = static_cast<std::size_t>(f.n_nodes);
    const bool with_unreachable = f.reachable_pairs < n * (n - 1);
    return detail::row_distribution(f, i, with_unreachable);
}

// network-average distribution: the distance of a random ordered node pair
inline distance_distribution mean_distribution(const fad_matrix& f)
{
    if (f.n_nodes < 2)
        throw std::invalid_argument("need at least two nodes");
    const auto n = static_cast<std::size_t>(f.n_nodes);
    const bool with_unreachable = f.reachable_pairs < n * (n - 1);
    distance_distribution d;
    d.has_unreachable_bin = with_unreachable;
    d.probs.assign(static_cast<std::size_t>(f.l_max) + (with_unreachable ? 1 : 0), 0.0);
    std::vector<std::size_t> counts(d.probs.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto q = f.dist[i * n + j];
            if (q == unreachable)
                ++counts.back();
            else
                ++counts[static_cast<std::size_t>(q) - 1];
        }
    }
    const double total = static_cast<double>(n) * static_cast<double>(n - 1);
    for (std::size_t k = 0; k < counts.size(); ++k)
        d.probs[k] = static_cast<double>(counts[k]) / total;
    return d;
}

// plain breadth-first hop distances on the aggregated static network
inline std::vector<std::int32_t> bfs_distances(const static_network& s, node_t source)
{
    if (source < 0 || source >= s.n_nodes)
        throw std::invalid_argument("source index out of range");
    std::vector<std::int32_t> dist(static_cast<std::size_t>(s.n_nodes), unreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<node_t> queue{source};
    while (!queue.empty()) {
        const node_t x = queue.front();
        queue.pop_front();
        for (const node_t y : s.adjacency[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] == unreachable) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

// BFS distances for all sources, in fad_matrix form (l_max = diameter)
inline fad_matrix static_distance_matrix(const static_network& s, unsigned workers = 1)
{
    if (s.n_nodes < 2)
        throw numeric_error("need at least two nodes to form node pairs");
    const auto n = static_cast<std::size_t>(s.n_nodes);
    fad_matrix f;
    f.n_nodes = s.n_nodes;
    f.dist.assign(n * n, unreachable);
    parallel_for(n, workers, [&](std::size_t i) {
        const auto row = bfs_distances(s, static_cast<node_t>(i));
        std::copy(row.begin(), row.end(), f.dist.begin() + static_cast<std::ptrdiff_t>(i * n));
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto d = f.dist[i * n + j];
            if (d != unreachable) {
                ++f.reachable_pairs;
                f.l_max = std::max(f.l_max, d);
            }
        }
    }
    return f;
}

// CSV export, one row per source, sentinel written as "inf"
inline void write_fad_csv(std::ostream& out, const fad_matrix& f)
{
    const auto n = static_cast<std::size_t>(f.n_nodes);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j)
                out << ',';
            const auto d = f.dist[i * n + j];
            if (d == unreachable)
                out << "inf";
            else
                out << d;
        }
        out << '\n';
    }
}

} // namespace tdis
