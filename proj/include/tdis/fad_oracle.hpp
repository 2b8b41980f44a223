#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "tdis/fad.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

/* Reference fastest-arrival distances by exhaustive enumeration of
 * strictly-time-increasing contact sequences. Deliberately shares no code
 * with the forward scan in fad.hpp; it exists to cross-check it on small
 * instances. States dominated in both arrival time and hop count are pruned,
 * which cannot change any (earliest arrival, fewest hops) outcome: a path
 * prefix that is no later and no longer reaches every completion the
 * dominated prefix reaches. */
inline std::vector<std::int32_t> brute_force_fad(const temporal_network& g, node_t source)
{
    if (source < 0 || source >= g.n_nodes)
        throw std::invalid_argument("source index out of range");
    if (g.n_contacts() > 25)
        throw std::invalid_argument("brute_force_fad is limited to 25 contacts");

    const auto n = static_cast<std::size_t>(g.n_nodes);
    constexpr time_t t_never = std::numeric_limits<time_t>::max();
    constexpr std::int32_t h_inf = std::numeric_limits<std::int32_t>::max();

    std::vector<time_t> best_arrival(n, t_never);
    std::vector<std::int32_t> best_hops(n, h_inf);
    std::vector<std::vector<std::pair<time_t, std::int32_t>>> pareto(n);

    struct frame {
        node_t node;
        time_t at;
        std::int32_t hops;
    };
    std::vector<frame> stack;
    stack.push_back({source, -1, 0});

    auto dominated = [&](node_t node, time_t at, std::int32_t hops) {
        for (const auto& [a, h] : pareto[static_cast<std::size_t>(node)])
            if (a <= at && h <= hops)
                return true;
        return false;
    };
    auto record = [&](node_t node, time_t at, std::int32_t hops) {
        auto& front = pareto[static_cast<std::size_t>(node)];
        std::erase_if(front, [&](const auto& p) { return at <= p.first && hops <= p.second; });
        front.emplace_back(at, hops);
    };
    record(source, -1, 0);

    while (!stack.empty()) {
        const frame f = stack.back();
        stack.pop_back();
        for (const auto& c : g.contacts) {
            if (c.t <= f.at)
                continue;
            node_t next;
            if (c.u == f.node)
                next = c.v;
            else if (c.v == f.node && !g.directed)
                next = c.u;
            else
                continue;
            const time_t at = c.t;
            const std::int32_t hops = f.hops + 1;
            const auto x = static_cast<std::size_t>(next);
            if (at < best_arrival[x]) {
                best_arrival[x] = at;
                best_hops[x] = hops;
            } else if (at == best_arrival[x] && hops < best_hops[x]) {
                best_hops[x] = hops;
            }
            if (dominated(next, at, hops))
                continue;
            record(next, at, hops);
            stack.push_back({next, at, hops});
        }
    }

    std::vector<std::int32_t> out(n, unreachable);
    out[static_cast<std::size_t>(source)] = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (j != static_cast<std::size_t>(source) && best_arrival[j] != t_never)
            out[j] = best_hops[j];
    return out;
}

} // namespace tdis
