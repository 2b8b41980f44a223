#pragma once

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "tdis/rng.hpp"
#include "tdis/temporal_network.hpp"

namespace fixtures {

/* Two hand-worked networks used across the suites. The frozen constants
 * below were produced by tests/oracle/reference_values.py (independent
 * brute-force path enumeration + direct formula evaluation in Python),
 * run before the library was written. */

// contacts {(0,1,0),(0,3,1),(1,2,1),(2,3,2)}, N = 4
inline tdis::temporal_network network_a()
{
    return tdis::make_network(4, 2, {{0, 1, 0}, {0, 3, 1}, {1, 2, 1}, {2, 3, 2}}, false, "A");
}

// network A without the (2,3,2) contact
inline tdis::temporal_network network_a2()
{
    return tdis::make_network(4, 2, {{0, 1, 0}, {0, 3, 1}, {1, 2, 1}}, false, "A2");
}

inline constexpr double oracle_jsd_h_a = 0.231049060187;      // = ln(2)/3
inline constexpr double oracle_tnnd_a = 0.210309917857;
inline constexpr double oracle_tnnd_a2 = 0.341239671429;
inline constexpr double oracle_td_a_a2 = 0.147990798489;
inline constexpr double oracle_mu_term_a_a2 = 0.085209979071;
inline constexpr double oracle_tnnd_term_a_a2 = 0.062780819418;
inline constexpr double oracle_static_d_a = 0.390356306657;

// small random instance for property tests; contact count is at most max_c
inline tdis::temporal_network random_network(tdis::rng_t& rng, int max_n = 8, int max_t = 6,
                                             int max_c = 20, bool directed = false)
{
    const auto n = static_cast<tdis::node_t>(2 + rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const auto horizon = static_cast<tdis::time_t>(rng.below(static_cast<std::uint64_t>(max_t + 1)));
    const auto want = 1 + rng.below(static_cast<std::uint64_t>(max_c));

    std::set<std::tuple<tdis::node_t, tdis::node_t, tdis::time_t>> triples;
    const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1) / 2 *
                                (static_cast<std::uint64_t>(horizon) + 1);
    const std::uint64_t target = std::min<std::uint64_t>(want, slots);
    while (triples.size() < target) {
        auto u = static_cast<tdis::node_t>(rng.below(static_cast<std::uint64_t>(n)));
        auto v = static_cast<tdis::node_t>(rng.below(static_cast<std::uint64_t>(n) - 1));
        if (v >= u)
            ++v;
        const auto t = static_cast<tdis::time_t>(
            rng.below(static_cast<std::uint64_t>(horizon) + 1));
        if (!directed && u > v)
            std::swap(u, v);
        triples.insert({u, v, t});
    }
    std::vector<tdis::contact> contacts;
    contacts.reserve(triples.size());
    for (const auto& [u, v, t] : triples)
        contacts.push_back({u, v, t});
    return tdis::make_network(n, horizon, std::move(contacts), directed);
}

} // namespace fixtures
