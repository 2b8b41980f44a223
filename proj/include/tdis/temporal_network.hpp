#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/rng.hpp"

namespace tdis {

using node_t = std::int32_t;
using time_t = std::int64_t;

// one time-stamped interaction; undirected networks store u < v
struct contact {
    node_t u = 0;
    node_t v = 0;
    time_t t = 0;

    friend bool operator==(const contact&, const contact&) = default;
};

// ascending (t, u, v) — canonical storage order
inline bool time_order(const contact& a, const contact& b)
{
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
}

/* A node set 0..n_nodes-1 plus a sorted, duplicate-free contact list over the
 * window [0, horizon]. Treated as immutable once built: all transforms return
 * new values. node_labels maps internal index -> external id for networks
 * that were parsed or sliced (empty means identity). */
struct temporal_network {
    node_t n_nodes = 0;
    time_t horizon = 0;
    bool directed = false;
    std::string label;
    std::vector<contact> contacts;
    std::vector<std::int64_t> node_labels;

    std::size_t n_contacts() const { return contacts.size(); }

    friend bool operator==(const temporal_network& a, const temporal_network& b)
    {
        return a.n_nodes == b.n_nodes && a.horizon == b.horizon &&
               a.directed == b.directed && a.contacts == b.contacts;
    }
};

/* Canonicalize and validate: order undirected pairs u < v, sort by (t, u, v),
 * drop duplicate triples, check index and window bounds. */
inline temporal_network make_network(node_t n_nodes, time_t horizon,
                                     std::vector<contact> contacts,
                                     bool directed = false, std::string label = {})
{
    for (auto& c : contacts) {
        if (c.u == c.v)
            throw std::invalid_argument("self-contact (" + std::to_string(c.u) + ")");
        if (c.u < 0 || c.v < 0 || c.u >= n_nodes || c.v >= n_nodes)
            throw std::invalid_argument("node index out of range");
        if (c.t < 0 || c.t > horizon)
            throw std::invalid_argument("timestamp outside [0, horizon]");
        if (!directed && c.u > c.v)
            std::swap(c.u, c.v);
    }
    std::sort(contacts.begin(), contacts.end(), time_order);
    contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
    temporal_network g;
    g.n_nodes = n_nodes;
    g.horizon = horizon;
    g.directed = directed;
    g.label = std::move(label);
    g.contacts = std::move(contacts);
    return g;
}

// unweighted aggregation: one edge per node pair with at least one contact
struct static_network {
    node_t n_nodes = 0;
    std::vector<std::pair<node_t, node_t>> edges; // u < v, sorted
    std::vector<std::vector<node_t>> adjacency;

    std::size_t n_edges() const { return edges.size(); }
};

/* Direction is collapsed: link counts, density and degrees are properties of
 * the undirected aggregate in all reported statistics. */
inline static_network aggregate(const temporal_network& g)
{
    std::vector<std::pair<node_t, node_t>> edges;
    edges.reserve(g.contacts.size());
    for (const auto& c : g.contacts)
        edges.emplace_back(std::min(c.u, c.v), std::max(c.u, c.v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    static_network s;
    s.n_nodes = g.n_nodes;
    s.adjacency.resize(static_cast<std::size_t>(g.n_nodes));
    for (const auto& [u, v] : edges) {
        s.adjacency[static_cast<std::size_t>(u)].push_back(v);
        s.adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
    s.edges = std::move(edges);
    return s;
}

/* Sub-network of contacts with t_a <= t < t_b, re-anchored to start at 0.
 * By default the node set shrinks to nodes with at least one kept contact
 * (daily sub-networks legitimately differ in N); keep_all_nodes retains the
 * full node set. */
inline temporal_network slice(const temporal_network& g, time_t t_a, time_t t_b,
                              bool keep_all_nodes = false)
{
    if (t_a < 0 || t_a >= t_b || t_b > g.horizon + 1)
        throw std::invalid_argument("slice window must satisfy 0 <= t_a < t_b <= horizon+1");

    std::vector<contact> kept;
    for (const auto& c : g.contacts)
        if (c.t >= t_a && c.t < t_b)
            kept.push_back({c.u, c.v, c.t - t_a});
    if (kept.empty())
        throw numeric_error("empty sub-network");

    temporal_network out;
    out.horizon = t_b - t_a - 1;
    out.directed = g.directed;
    out.label = g.label;

    if (keep_all_nodes) {
        out.n_nodes = g.n_nodes;
        out.node_labels = g.node_labels;
        out.contacts = std::move(kept);
        return out;
    }

    // restrict to active nodes, relabel in ascending old-index order
    std::vector<node_t> remap(static_cast<std::size_t>(g.n_nodes), -1);
    for (const auto& c : kept) {
        remap[static_cast<std::size_t>(c.u)] = 0;
        remap[static_cast<std::size_t>(c.v)] = 0;
    }
    node_t next = 0;
    for (node_t i = 0; i < g.n_nodes; ++i) {
        if (remap[static_cast<std::size_t>(i)] == 0) {
            remap[static_cast<std::size_t>(i)] = next++;
            const auto old = static_cast<std::size_t>(i);
            out.node_labels.push_back(g.node_labels.empty()
                                          ? static_cast<std::int64_t>(old)
                                          : g.node_labels[old]);
        }
    }
    out.n_nodes = next;
    for (auto& c : kept) {
        c.u = remap[static_cast<std::size_t>(c.u)];
        c.v = remap[static_cast<std::size_t>(c.v)];
    }
    out.contacts = std::move(kept);
    return out;
}

namespace detail {

struct triple_hash {
    std::size_t operator()(const contact& c) const
    {
        std::uint64_t h = static_cast<std::uint64_t>(c.t);
        h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.u)) << 32 |
                       static_cast<std::uint32_t>(c.v)));
        return static_cast<std::size_t>(h);
    }
};

struct triple_eq {
    bool operator()(const contact& a, const contact& b) const { return a == b; }
};

using contact_set = std::unordered_set<contact, triple_hash, triple_eq>;

inline contact_set to_set(const std::vector<contact>& cs)
{
    contact_set s;
    s.reserve(cs.size() * 2);
    s.insert(cs.begin(), cs.end());
    return s;
}

} // namespace detail

/* Random perturbation: f < 0 deletes floor(|f|*C) contacts uniformly,
 * f > 0 adds floor(f*C) new uniformly random (pair, timestamp) triples not
 * already present. Node set and horizon are unchanged. */
inline temporal_network perturb(const temporal_network& g, double f, rng_t& rng)
{
    if (f < -1.0 || f > 1.0)
        throw std::invalid_argument("perturbation fraction outside [-1, 1]");
    const auto c_count = static_cast<double>(g.n_contacts());
    const auto k = static_cast<std::size_t>(std::abs(f) * c_count);
    if (f != 0.0 && k < 1)
        throw std::invalid_argument("|f|*C < 1: nothing to perturb");

    std::vector<contact> contacts = g.contacts;
    if (f < 0.0) {
        // partial Fisher-Yates: move k random picks to the back, then drop them
        std::size_t remaining = contacts.size();
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t pick = rng.below(remaining);
            std::swap(contacts[pick], contacts[remaining - 1]);
            --remaining;
        }
        contacts.resize(remaining);
    } else if (f > 0.0) {
        auto present = detail::to_set(contacts);
        const std::uint64_t n = static_cast<std::uint64_t>(g.n_nodes);
        const std::uint64_t n_pairs = g.directed ? n * (n - 1) : n * (n - 1) / 2;
        std::size_t added = 0;
        std::size_t attempts_left = 100 * k;
        while (added < k) {
            if (attempts_left-- == 0)
                throw numeric_error("perturbation: no free (pair, timestamp) slot found");
            const std::uint64_t e = rng.below(n_pairs);
            contact c;
            if (g.directed) {
                c.u = static_cast<node_t>(e / (n - 1));
                const auto r = static_cast<node_t>(e % (n - 1));
                c.v = r < c.u ? r : r + 1;
            } else {
                // decode triangular index: pair (u, v) with u < v
                auto row = static_cast<std::uint64_t>(
                    (std::sqrt(8.0 * static_cast<double>(e) + 1.0) - 1.0) / 2.0);
                while (row * (row + 1) / 2 > e)
                    --row;
                while ((row + 1) * (row + 2) / 2 <= e)
                    ++row;
                c.v = static_cast<node_t>(row + 1);
                c.u = static_cast<node_t>(e - row * (row + 1) / 2);
            }
            c.t = static_cast<time_t>(rng.below(static_cast<std::uint64_t>(g.horizon) + 1));
            if (present.insert(c).second) {
                contacts.push_back(c);
                ++added;
            }
        }
    }
    return make_network(g.n_nodes, g.horizon, std::move(contacts), g.directed, g.label);
}

} // namespace tdis
