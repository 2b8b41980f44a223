#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/fad.hpp"
#include "tdis/parallel.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

/* Jensen-Shannon divergence of K distributions over a common support,
 * natural logarithm:  J = (1/K) sum_i sum_q p_i(q) ln(p_i(q) / m_q)  with
 * m_q the mixture. Ranges over [0, ln K]; 0 * ln 0 = 0. */
inline double jsd(std::span<const distance_distribution> ps)
{
    if (ps.size() < 2)
        throw std::invalid_argument("jsd needs at least two distributions");
    const std::size_t support = ps[0].support_len();
    for (const auto& p : ps) {
        if (p.support_len() != support)
            throw std::invalid_argument("jsd: mismatched supports");
        double sum = 0.0;
        for (const double x : p.probs)
            sum += x;
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("jsd: distribution not normalized");
    }

    const double k = static_cast<double>(ps.size());
    std::vector<double> mix(support, 0.0);
    for (const auto& p : ps)
        for (std::size_t q = 0; q < support; ++q)
            mix[q] += p.probs[q];
    for (double& m : mix)
        m /= k;

    /* one subtotal per distribution, then one commutative sum: jsd of two
     * distributions is bitwise identical under argument swap, which keeps
     * the pair dissimilarity exactly symmetric */
    double total = 0.0;
    for (const auto& p : ps) {
        double sub = 0.0;
        for (std::size_t q = 0; q < support; ++q) {
            const double pq = p.probs[q];
            if (pq > 0.0)
                sub += pq * std::log(pq / mix[q]); // mix[q] >= pq/K > 0 here
        }
        total += sub;
    }
    return total / k;
}

inline double jsd(const distance_distribution& a, const distance_distribution& b)
{
    const distance_distribution pair[2] = {a, b};
    return jsd(std::span<const distance_distribution>(pair, 2));
}

/* Node dispersion: divergence of the per-node distance distributions,
 * normalized by ln(l_max + 1). Larger values mean more heterogeneous
 * connectivity. */
inline double tnnd(const fad_matrix& f)
{
    if (f.n_nodes < 2)
        throw numeric_error("node dispersion needs at least two nodes");
    if (f.reachable_pairs == 0)
        throw numeric_error("degenerate network: no reachable pair");
    std::vector<distance_distribution> hs;
    hs.reserve(static_cast<std::size_t>(f.n_nodes));
    for (node_t i = 0; i < f.n_nodes; ++i)
        hs.push_back(node_distribution(f, i));
    return jsd(hs) / std::log(static_cast<double>(f.l_max) + 1.0);
}

/* Put two distributions on a common support: finite bins zero-padded to the
 * longer finite support; if either carries unreachable mass, both get a
 * shared final unreachable bin. The unreachable class is aligned with itself,
 * never with a numeric distance. */
inline std::pair<distance_distribution, distance_distribution>
align_supports(const distance_distribution& a, const distance_distribution& b)
{
    const std::size_t fin_a = a.support_len() - (a.has_unreachable_bin ? 1 : 0);
    const std::size_t fin_b = b.support_len() - (b.has_unreachable_bin ? 1 : 0);
    const std::size_t fin = std::max(fin_a, fin_b);
    const bool unreach = a.has_unreachable_bin || b.has_unreachable_bin;

    auto rebuild = [&](const distance_distribution& d, std::size_t fin_d) {
        distance_distribution out;
        out.has_unreachable_bin = unreach;
        out.probs.assign(fin + (unreach ? 1 : 0), 0.0);
        for (std::size_t q = 0; q < fin_d; ++q)
            out.probs[q] = d.probs[q];
        if (unreach && d.has_unreachable_bin)
            out.probs.back() = d.probs.back();
        return out;
    };
    return {rebuild(a, fin_a), rebuild(b, fin_b)};
}

/* Dissimilarity between two networks:
 *   TD = w1 * sqrt(J(mu_1, mu_2) / ln 2) + w2 * |sqrt(TNND_1) - sqrt(TNND_2)|
 * where mu is the network-average distance distribution. Symmetric, zero for
 * identical inputs; falls in [0, 1] for all networks observed in practice
 * (not clipped if a pathological input exceeds it). */
struct dissimilarity_report {
    double td = 0.0;
    double mu_term = 0.0;
    double tnnd_term = 0.0;
    double tnnd_1 = 0.0;
    double tnnd_2 = 0.0;
    double mu_jsd = 0.0;
    std::size_t aligned_support_len = 0;
    double omega_1 = 0.5;
    double omega_2 = 0.5;
};

inline dissimilarity_report td_from_matrices(const fad_matrix& f1, const fad_matrix& f2,
                                             double w1 = 0.5, double w2 = 0.5)
{
    if (w1 < 0.0 || w1 > 1.0 || w2 < 0.0 || w2 > 1.0 || std::abs(w1 + w2 - 1.0) > 1e-12)
        throw std::invalid_argument("weights must lie in [0,1] and sum to 1");

    dissimilarity_report r;
    r.omega_1 = w1;
    r.omega_2 = w2;
    r.tnnd_1 = tnnd(f1);
    r.tnnd_2 = tnnd(f2);

    const auto [mu1, mu2] = align_supports(mean_distribution(f1), mean_distribution(f2));
    r.aligned_support_len = mu1.support_len();
    r.mu_jsd = jsd(mu1, mu2);
    r.mu_term = w1 * std::sqrt(r.mu_jsd / std::log(2.0));
    r.tnnd_term = w2 * std::abs(std::sqrt(r.tnnd_1) - std::sqrt(r.tnnd_2));
    r.td = r.mu_term + r.tnnd_term;
    return r;
}

inline dissimilarity_report temporal_dissimilarity(const temporal_network& g1,
                                                   const temporal_network& g2, double w1 = 0.5,
                                                   double w2 = 0.5, unsigned workers = 1)
{
    return td_from_matrices(compute_fad(g1, workers), compute_fad(g2, workers), w1, w2);
}

/* Same measure with the second side replaced by shortest-path quantities of
 * a static network (the diameter plays the role of l_max). */
inline dissimilarity_report static_dissimilarity(const temporal_network& g,
                                                 const static_network& gs, double w1 = 0.5,
                                                 double w2 = 0.5, unsigned workers = 1)
{
    if (g.n_nodes != gs.n_nodes)
        throw std::invalid_argument("node counts differ");
    return td_from_matrices(compute_fad(g, workers), static_distance_matrix(gs, workers), w1, w2);
}

/* Pairwise dissimilarity matrix (row-major K x K): zero diagonal, each
 * unordered pair computed once. */
inline std::vector<double> dissimilarity_matrix(std::span<const temporal_network> gs,
                                                double w1 = 0.5, double w2 = 0.5,
                                                unsigned workers = 1)
{
    const std::size_t k = gs.size();
    if (k < 2)
        throw std::invalid_argument("need at least two networks");

    std::vector<fad_matrix> fads(k);
    parallel_for(k, workers, [&](std::size_t i) { fads[i] = compute_fad(gs[i]); });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            pairs.emplace_back(i, j);

    std::vector<double> m(k * k, 0.0);
    parallel_for(pairs.size(), workers, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        const double v = td_from_matrices(fads[i], fads[j], w1, w2).td;
        m[i * k + j] = v;
        m[j * k + i] = v;
    });
    return m;
}

} // namespace tdis
