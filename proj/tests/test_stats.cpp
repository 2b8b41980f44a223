#include <doctest.h>

#include "fixtures.hpp"
#include "tdis/stats.hpp"

using namespace tdis;

TEST_CASE("statistics of the hand-worked network")
{
    const auto a = fixtures::network_a();
    const auto st = compute_stats(a, compute_fad(a));
    CHECK(st.n_nodes == 4);
    CHECK(st.n_contacts == 4);
    CHECK(st.horizon == 2);
    CHECK(st.n_edges == 4);
    CHECK(st.link_density == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(st.avg_degree == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(st.reachable_pairs == 10);
    CHECK(st.reachable_fraction == doctest::Approx(10.0 / 12).epsilon(1e-12));
    CHECK(st.mean_fad == doctest::Approx(1.2).epsilon(1e-12));
    // every node lives from its first to last contact exactly one step apart
    CHECK(st.cv_lifespan == 0.0);
    CHECK_FALSE(st.cv_degenerate);
}

TEST_CASE("single-timestep networks flag the degenerate lifespan")
{
    std::vector<contact> cs;
    for (node_t u = 0; u < 4; ++u)
        for (node_t v = u + 1; v < 4; ++v)
            cs.push_back({u, v, 0});
    const auto g = make_network(4, 0, std::move(cs));
    const auto st = compute_stats(g, compute_fad(g));
    CHECK(st.cv_lifespan == 0.0);
    CHECK(st.cv_degenerate);
    for (const auto& [p, frac] : st.node_fraction_curve)
        CHECK(frac == 1.0);
}

TEST_CASE("node fraction curve is monotone and ends at one")
{
    rng_t rng(2024);
    for (int it = 0; it < 30; ++it) {
        const auto g = fixtures::random_network(rng);
        const auto st = compute_stats(g, compute_fad(g));
        REQUIRE(st.node_fraction_curve.size() == 20);
        double prev = 0.0;
        for (const auto& [p, frac] : st.node_fraction_curve) {
            CHECK(frac >= prev);
            prev = frac;
        }
        CHECK(st.node_fraction_curve.back().second == 1.0);
    }
}

TEST_CASE("first-occurrence fractions on a two-step network")
{
    const auto a = fixtures::network_a(); // nodes 0,1 first at t=0; 2,3 at t=1
    const auto st = compute_stats(a, compute_fad(a));
    CHECK(st.node_fraction_curve[0] == std::pair<double, double>{0.05, 0.5});
    CHECK(st.node_fraction_curve[9] == std::pair<double, double>{0.5, 1.0}); // p*T = 1
}

TEST_CASE("bounds hold on random instances")
{
    rng_t rng(555);
    for (int it = 0; it < 40; ++it) {
        const auto g = fixtures::random_network(rng);
        const auto st = compute_stats(g, compute_fad(g));
        CHECK(st.link_density >= 0.0);
        CHECK(st.link_density <= 1.0);
        const auto n = static_cast<std::size_t>(g.n_nodes);
        CHECK(st.n_edges <= std::min(st.n_contacts, n * (n - 1) / 2));
        CHECK(st.reachable_fraction >= 0.0);
        CHECK(st.reachable_fraction <= 1.0);
    }
}

TEST_CASE("stats reject a mismatched fad matrix")
{
    const auto a = fixtures::network_a();
    const auto other = compute_fad(make_network(3, 0, {{0, 1, 0}, {1, 2, 0}}));
    CHECK_THROWS_AS(compute_stats(a, other), std::invalid_argument);
}
