#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/rng.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

// the contact times of one link, ascending
struct link_sequence {
    std::pair<node_t, node_t> edge;
    std::vector<time_t> times;

    std::size_t weight() const { return times.size(); }
};

// decompose into per-link sequences, canonical edge order
inline std::vector<link_sequence> link_sequences(const temporal_network& g)
{
    std::map<std::pair<node_t, node_t>, std::vector<time_t>> by_link;
    for (const auto& c : g.contacts)
        by_link[{c.u, c.v}].push_back(c.t);
    std::vector<link_sequence> out;
    out.reserve(by_link.size());
    for (auto& [edge, times] : by_link) {
        std::sort(times.begin(), times.end());
        out.push_back({edge, std::move(times)});
    }
    return out;
}

namespace detail {

inline temporal_network from_link_sequences(const temporal_network& proto,
                                            const std::vector<link_sequence>& links)
{
    std::vector<contact> contacts;
    for (const auto& l : links)
        for (const time_t t : l.times)
            contacts.push_back({l.edge.first, l.edge.second, t});
    return make_network(proto.n_nodes, proto.horizon, std::move(contacts), proto.directed,
                        proto.label);
}

// union-find component count helper
struct union_find {
    std::vector<node_t> parent;

    explicit union_find(node_t n) : parent(static_cast<std::size_t>(n))
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    node_t find(node_t x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(node_t a, node_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

inline bool is_connected(node_t n, const std::vector<std::pair<node_t, node_t>>& edges)
{
    if (n <= 1)
        return true;
    union_find uf(n);
    node_t merges = 0;
    for (const auto& [u, v] : edges)
        if (uf.unite(u, v))
            ++merges;
    return merges == n - 1;
}

} // namespace detail

/* Equal-weight link-sequence shuffle: sequences move uniformly at random
 * between links of the same weight. Preserves the static graph, per-link
 * weights, the global timestamp multiset and every sequence intact. */
inline temporal_network shuffle_ewlss(const temporal_network& g, rng_t& rng)
{
    auto links = link_sequences(g);
    std::map<std::size_t, std::vector<std::size_t>> classes; // weight -> link indices
    for (std::size_t i = 0; i < links.size(); ++i)
        classes[links[i].weight()].push_back(i);
    for (auto& [w, idx] : classes) {
        std::vector<std::vector<time_t>> seqs;
        seqs.reserve(idx.size());
        for (const std::size_t i : idx)
            seqs.push_back(std::move(links[i].times));
        rng.shuffle(seqs);
        for (std::size_t k = 0; k < idx.size(); ++k)
            links[idx[k]].times = std::move(seqs[k]);
    }
    return detail::from_link_sequences(g, links);
}

/* Link-sequence shuffle: sequences move uniformly at random between all
 * links; weights travel with their sequences. */
inline temporal_network shuffle_lss(const temporal_network& g, rng_t& rng)
{
    auto links = link_sequences(g);
    std::vector<std::vector<time_t>> seqs;
    seqs.reserve(links.size());
    for (auto& l : links)
        seqs.push_back(std::move(l.times));
    rng.shuffle(seqs);
    for (std::size_t i = 0; i < links.size(); ++i)
        links[i].times = std::move(seqs[i]);
    return detail::from_link_sequences(g, links);
}

/* Time shuffle: the global timestamp multiset is randomly permuted across
 * contacts while every contact keeps its link. Permutations that would place
 * equal timestamps on one link are repaired by re-drawing swap partners, so
 * the contact count is preserved exactly. */
inline temporal_network shuffle_ts(const temporal_network& g, rng_t& rng)
{
    const std::size_t c = g.n_contacts();
    std::vector<time_t> times(c);
    for (std::size_t i = 0; i < c; ++i)
        times[i] = g.contacts[i].t;
    rng.shuffle(times);

    auto link_of = [&](std::size_t i) {
        return std::make_pair(g.contacts[i].u, g.contacts[i].v);
    };
    for (int round = 0; round < 200; ++round) {
        // indices whose (link, time) collides with an earlier contact
        std::set<std::pair<std::pair<node_t, node_t>, time_t>> seen;
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < c; ++i)
            if (!seen.insert({link_of(i), times[i]}).second)
                bad.push_back(i);
        if (bad.empty()) {
            std::vector<contact> contacts(c);
            for (std::size_t i = 0; i < c; ++i)
                contacts[i] = {g.contacts[i].u, g.contacts[i].v, times[i]};
            return make_network(g.n_nodes, g.horizon, std::move(contacts), g.directed, g.label);
        }
        for (const std::size_t i : bad)
            std::swap(times[i], times[rng.below(c)]);
    }
    throw numeric_error("time shuffle: could not resolve duplicate contacts");
}

/* Uniformly random times: every contact's timestamp is redrawn uniformly
 * from [0, horizon]; links fixed, collisions on a link redrawn. */
inline temporal_network shuffle_urt(const temporal_network& g, rng_t& rng)
{
    std::map<std::pair<node_t, node_t>, std::set<time_t>> used;
    std::vector<contact> contacts;
    contacts.reserve(g.n_contacts());
    const auto span = static_cast<std::uint64_t>(g.horizon) + 1;
    for (const auto& c : g.contacts) {
        auto& taken = used[{c.u, c.v}];
        time_t t = 0;
        bool placed = false;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            t = static_cast<time_t>(rng.below(span));
            if (taken.insert(t).second) {
                placed = true;
                break;
            }
        }
        if (!placed)
            throw numeric_error("uniform time draw: no free timestamp on link");
        contacts.push_back({c.u, c.v, t});
    }
    return make_network(g.n_nodes, g.horizon, std::move(contacts), g.directed, g.label);
}

namespace detail {

/* Make the simple graph connected by degree-preserving double-edge swaps
 * between components. Swapping (a,b),(c,d) from different components to
 * (a,c),(b,d) cannot create self or duplicate edges and always reduces the
 * component count by one. */
inline void connect_by_swaps(node_t n, std::vector<std::pair<node_t, node_t>>& edges, rng_t& rng)
{
    for (;;) {
        union_find uf(n);
        for (const auto& [u, v] : edges)
            uf.unite(u, v);
        std::map<node_t, std::vector<std::size_t>> comp_edges;
        for (std::size_t i = 0; i < edges.size(); ++i)
            comp_edges[uf.find(edges[i].first)].push_back(i);
        bool all_nodes_covered = true;
        std::set<node_t> roots;
        for (node_t x = 0; x < n; ++x)
            roots.insert(uf.find(x));
        if (roots.size() <= 1)
            return;
        if (comp_edges.size() < roots.size())
            all_nodes_covered = false; // an isolated, edgeless component
        if (!all_nodes_covered || comp_edges.size() < 2)
            throw numeric_error("cannot connect graph: edgeless component");

        auto it = comp_edges.begin();
        const auto& ea = it->second;
        ++it;
        const auto& eb = it->second;
        auto& e1 = edges[ea[rng.below(ea.size())]];
        auto& e2 = edges[eb[rng.below(eb.size())]];
        const auto [a, b] = e1;
        const auto [c, d] = e2;
        e1 = {std::min(a, c), std::max(a, c)};
        e2 = {std::min(b, d), std::max(b, d)};
    }
}

// assign the original sequences to a new edge list by a random bijection
inline temporal_network rewire_with_sequences(const temporal_network& g,
                                              std::vector<std::pair<node_t, node_t>> edges,
                                              rng_t& rng)
{
    auto links = link_sequences(g);
    if (edges.size() != links.size())
        throw numeric_error("rewiring changed the link count");
    std::vector<std::vector<time_t>> seqs;
    seqs.reserve(links.size());
    for (auto& l : links)
        seqs.push_back(std::move(l.times));
    rng.shuffle(seqs);
    std::sort(edges.begin(), edges.end());
    std::vector<link_sequence> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.push_back({edges[i], std::move(seqs[i])});
    return detail::from_link_sequences(g, out);
}

} // namespace detail

namespace detail {

/* Deterministic simple graph with the given degree sequence: repeatedly
 * connect the largest remaining degree to the next-largest ones. The input
 * comes from an actual simple graph so it is always graphical. */
inline std::vector<std::pair<node_t, node_t>>
havel_hakimi(std::vector<std::size_t> degrees)
{
    std::vector<std::pair<node_t, node_t>> edges;
    std::vector<std::pair<std::size_t, node_t>> remaining; // (degree left, node)
    for (node_t x = 0; x < static_cast<node_t>(degrees.size()); ++x)
        remaining.emplace_back(degrees[static_cast<std::size_t>(x)], x);
    for (;;) {
        std::sort(remaining.begin(), remaining.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (remaining.front().first == 0)
            break;
        const auto [d, x] = remaining.front();
        if (d >= remaining.size())
            throw numeric_error("degree sequence not graphical");
        remaining.front().first = 0;
        for (std::size_t k = 1; k <= d; ++k) {
            if (remaining[k].first == 0)
                throw numeric_error("degree sequence not graphical");
            --remaining[k].first;
            const node_t y = remaining[k].second;
            edges.emplace_back(std::min(x, y), std::max(x, y));
        }
    }
    return edges;
}

/* Randomize a simple graph in place by double-edge swaps that keep it
 * simple. Attempt count is bounded; on dense graphs few proposals are
 * acceptable and few are needed. */
inline void randomize_by_swaps(std::vector<std::pair<node_t, node_t>>& edges, rng_t& rng)
{
    if (edges.size() < 2)
        return;
    std::set<std::pair<node_t, node_t>> present(edges.begin(), edges.end());
    const std::size_t target = 10 * edges.size();
    const std::size_t max_attempts = 100 * edges.size() + 1000;
    std::size_t done = 0;
    for (std::size_t attempt = 0; attempt < max_attempts && done < target; ++attempt) {
        const std::size_t i = rng.below(edges.size());
        const std::size_t j = rng.below(edges.size());
        if (i == j)
            continue;
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        const bool flip = rng.bernoulli(0.5);
        const auto p1 = std::minmax(a, flip ? d : c);
        const auto p2 = std::minmax(b, flip ? c : d);
        if (p1.first == p1.second || p2.first == p2.second || p1 == p2)
            continue;
        if (present.count(p1) || present.count(p2))
            continue;
        present.erase(edges[i]);
        present.erase(edges[j]);
        present.insert(p1);
        present.insert(p2);
        edges[i] = {p1.first, p1.second};
        edges[j] = {p2.first, p2.second};
        ++done;
    }
}

} // namespace detail

/* Configuration model: a connected simple static graph with the original
 * degree sequence (deterministic construction, randomized by degree-
 * preserving double-edge swaps, then cross-component swaps until connected);
 * the original link sequences are assigned to the new links by a uniform
 * random bijection. */
inline temporal_network shuffle_cm(const temporal_network& g, rng_t& rng)
{
    if (g.directed)
        throw std::invalid_argument("configuration model requires an undirected network");
    const auto agg = aggregate(g);
    if (!detail::is_connected(g.n_nodes, agg.edges))
        throw numeric_error("configuration model requires a connected aggregate");

    std::vector<std::size_t> degrees;
    degrees.reserve(agg.adjacency.size());
    for (const auto& nbrs : agg.adjacency)
        degrees.push_back(nbrs.size());

    auto edges = detail::havel_hakimi(std::move(degrees));
    detail::randomize_by_swaps(edges, rng);
    detail::connect_by_swaps(g.n_nodes, edges, rng);
    return detail::rewire_with_sequences(g, std::move(edges), rng);
}

/* Random network: a connected uniform simple graph with the original node
 * and link counts; sequences assigned by random bijection. */
inline temporal_network shuffle_rn(const temporal_network& g, rng_t& rng)
{
    if (g.directed)
        throw std::invalid_argument("random network model requires an undirected network");
    const auto agg = aggregate(g);
    const auto n = static_cast<std::uint64_t>(g.n_nodes);
    const std::uint64_t m = agg.n_edges();
    if (m < n - 1)
        throw numeric_error("too few links for a connected network");
    if (m > n * (n - 1) / 2)
        throw numeric_error("more links than node pairs");

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::set<std::uint64_t> codes;
        while (codes.size() < m)
            codes.insert(rng.below(n * (n - 1) / 2));
        std::vector<std::pair<node_t, node_t>> edges;
        edges.reserve(m);
        for (const std::uint64_t e : codes) {
            // triangular decode, pair (u, v) with u < v
            auto row = static_cast<std::uint64_t>(
                (std::sqrt(8.0 * static_cast<double>(e) + 1.0) - 1.0) / 2.0);
            while (row * (row + 1) / 2 > e)
                --row;
            while ((row + 1) * (row + 2) / 2 <= e)
                ++row;
            edges.emplace_back(static_cast<node_t>(e - row * (row + 1) / 2),
                               static_cast<node_t>(row + 1));
        }
        if (detail::is_connected(g.n_nodes, edges))
            return detail::rewire_with_sequences(g, std::move(edges), rng);
    }
    throw numeric_error("random network: no connected sample within budget");
}

enum class ref_model { ewlss, lss, ts, urt, cm, rn };

inline temporal_network apply_ref_model(const temporal_network& g, ref_model model, rng_t& rng)
{
    switch (model) {
    case ref_model::ewlss: return shuffle_ewlss(g, rng);
    case ref_model::lss: return shuffle_lss(g, rng);
    case ref_model::ts: return shuffle_ts(g, rng);
    case ref_model::urt: return shuffle_urt(g, rng);
    case ref_model::cm: return shuffle_cm(g, rng);
    case ref_model::rn: return shuffle_rn(g, rng);
    }
    throw std::invalid_argument("unknown reference model");
}

inline ref_model ref_model_from_name(const std::string& name)
{
    if (name == "ewlss") return ref_model::ewlss;
    if (name == "lss") return ref_model::lss;
    if (name == "ts") return ref_model::ts;
    if (name == "urt") return ref_model::urt;
    if (name == "cm") return ref_model::cm;
    if (name == "rn") return ref_model::rn;
    throw std::invalid_argument("unknown reference model '" + name + "'");
}

inline const char* ref_model_name(ref_model m)
{
    switch (m) {
    case ref_model::ewlss: return "ewlss";
    case ref_model::lss: return "lss";
    case ref_model::ts: return "ts";
    case ref_model::urt: return "urt";
    case ref_model::cm: return "cm";
    case ref_model::rn: return "rn";
    }
    return "?";
}

} // namespace tdis
