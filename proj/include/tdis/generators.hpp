#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tdis/rng.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

/* Node activity distribution for the activity-driven model: either
 * Uniform(0, a_max] or a power law ~ a^(-exponent) truncated to [eps, 1].
 * The pure power law on (0, 1) is not normalizable, hence the cutoff. */
struct activity_spec {
    enum class dist { uniform, power_law };

    dist kind = dist::uniform;
    double a_max = 1.0;     // uniform upper bound, in (0, 1]
    double exponent = 3.0;  // power-law exponent, > 2
    double eps = 1e-3;      // power-law lower cutoff, in (0, 1)
};

inline std::vector<double> sample_activities(const activity_spec& spec, node_t n, rng_t& rng)
{
    if (n < 1)
        throw std::invalid_argument("need at least one node");
    std::vector<double> a(static_cast<std::size_t>(n));
    if (spec.kind == activity_spec::dist::uniform) {
        if (spec.a_max <= 0.0 || spec.a_max > 1.0)
            throw std::invalid_argument("a_max must be in (0, 1]");
        for (double& x : a)
            x = spec.a_max * (1.0 - rng.unit()); // (0, a_max]
    } else {
        if (spec.exponent <= 2.0)
            throw std::invalid_argument("power-law exponent must exceed 2");
        if (spec.eps <= 0.0 || spec.eps >= 1.0)
            throw std::invalid_argument("power-law cutoff must be in (0, 1)");
        // inverse transform of density ~ a^(-r) on [eps, 1]
        const double e = std::pow(spec.eps, 1.0 - spec.exponent);
        for (double& x : a) {
            const double u = rng.unit();
            x = std::pow(e + u * (1.0 - e), 1.0 / (1.0 - spec.exponent));
        }
    }
    return a;
}

/* Activity-driven temporal network: at every step t in [0, horizon] each node
 * activates with probability a_i and contacts m distinct random other nodes.
 * Within a step, duplicate unordered pairs merge into a single contact. */
inline temporal_network activity_driven(node_t n, time_t horizon, int m,
                                        std::span<const double> activities, rng_t& rng,
                                        std::string label = {})
{
    if (n < 2)
        throw std::invalid_argument("need at least two nodes");
    if (m < 1 || m >= n)
        throw std::invalid_argument("contacts per activation must be in [1, N-1]");
    if (activities.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("activity vector length must equal N");

    std::vector<contact> contacts;
    std::vector<contact> step; // contacts of the current time step
    std::vector<node_t> picks;
    for (time_t t = 0; t <= horizon; ++t) {
        step.clear();
        for (node_t i = 0; i < n; ++i) {
            if (!rng.bernoulli(activities[static_cast<std::size_t>(i)]))
                continue;
            picks.clear();
            while (picks.size() < static_cast<std::size_t>(m)) {
                auto j = static_cast<node_t>(rng.below(static_cast<std::uint64_t>(n) - 1));
                if (j >= i)
                    ++j;
                if (std::find(picks.begin(), picks.end(), j) == picks.end())
                    picks.push_back(j);
            }
            for (const node_t j : picks)
                step.push_back({std::min(i, j), std::max(i, j), t});
        }
        std::sort(step.begin(), step.end(), time_order);
        step.erase(std::unique(step.begin(), step.end()), step.end());
        contacts.insert(contacts.end(), step.begin(), step.end());
    }
    return make_network(n, horizon, std::move(contacts), false, std::move(label));
}

} // namespace tdis
