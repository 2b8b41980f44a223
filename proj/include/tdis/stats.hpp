#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "tdis/fad.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

/* Descriptive statistics of one temporal network and its unweighted
 * aggregate. mean_fad averages over reachable ordered pairs only. */
struct network_stats {
    node_t n_nodes = 0;
    std::size_t n_contacts = 0;
    time_t horizon = 0;
    std::size_t n_edges = 0;
    double link_density = 0.0; // 2M / N(N-1)
    double avg_degree = 0.0;   // 2M / N
    double cv_lifespan = 0.0;  // population std / mean of node lifespans
    bool cv_degenerate = false; // all lifespans zero
    std::size_t reachable_pairs = 0;
    double reachable_fraction = 0.0; // R / N(N-1)
    double mean_fad = 0.0;
    // (p, fraction of ever-active nodes first seen by p * horizon), p = 0.05..1
    std::vector<std::pair<double, double>> node_fraction_curve;
};

inline network_stats compute_stats(const temporal_network& g, const fad_matrix& fad)
{
    if (fad.n_nodes != g.n_nodes)
        throw std::invalid_argument("fad matrix does not match network");
    const auto n = static_cast<std::size_t>(g.n_nodes);

    network_stats st;
    st.n_nodes = g.n_nodes;
    st.n_contacts = g.n_contacts();
    st.horizon = g.horizon;

    const auto agg = aggregate(g);
    st.n_edges = agg.n_edges();
    const double nd = static_cast<double>(g.n_nodes);
    st.link_density = n >= 2 ? 2.0 * static_cast<double>(st.n_edges) / (nd * (nd - 1.0)) : 0.0;
    st.avg_degree = n >= 1 ? 2.0 * static_cast<double>(st.n_edges) / nd : 0.0;

    // lifespan: time between a node's first and last contact
    constexpr time_t never = std::numeric_limits<time_t>::max();
    std::vector<time_t> first(n, never), last(n, -1);
    for (const auto& c : g.contacts) {
        for (const node_t x : {c.u, c.v}) {
            auto& fx = first[static_cast<std::size_t>(x)];
            auto& lx = last[static_cast<std::size_t>(x)];
            fx = std::min(fx, c.t);
            lx = std::max(lx, c.t);
        }
    }
    std::vector<double> lifespans;
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (first[i] == never)
            continue;
        ++active;
        lifespans.push_back(static_cast<double>(last[i] - first[i]));
    }
    if (!lifespans.empty()) {
        double mean = 0.0;
        for (const double x : lifespans)
            mean += x;
        mean /= static_cast<double>(lifespans.size());
        double var = 0.0;
        for (const double x : lifespans)
            var += (x - mean) * (x - mean);
        var /= static_cast<double>(lifespans.size());
        if (mean > 0.0) {
            st.cv_lifespan = std::sqrt(var) / mean;
        } else {
            st.cv_lifespan = 0.0;
            st.cv_degenerate = true;
        }
    } else {
        st.cv_degenerate = true;
    }

    st.reachable_pairs = fad.reachable_pairs;
    st.reachable_fraction =
        n >= 2 ? static_cast<double>(fad.reachable_pairs) / (nd * (nd - 1.0)) : 0.0;
    double fad_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && fad.dist[i * n + j] != unreachable)
                fad_sum += static_cast<double>(fad.dist[i * n + j]);
    st.mean_fad = fad.reachable_pairs ? fad_sum / static_cast<double>(fad.reachable_pairs) : 0.0;

    /* fraction of ever-active nodes whose first contact falls in [0, p*T];
     * the denominator counts ever-active nodes so the curve ends at 1 even
     * when isolated nodes exist */
    for (int step = 1; step <= 20; ++step) {
        const double p = 0.05 * static_cast<double>(step);
        const double cutoff = p * static_cast<double>(g.horizon);
        std::size_t seen = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (first[i] != never && static_cast<double>(first[i]) <= cutoff)
                ++seen;
        const double frac =
            active ? static_cast<double>(seen) / static_cast<double>(active) : 0.0;
        st.node_fraction_curve.emplace_back(p, frac);
    }
    return st;
}

} // namespace tdis
