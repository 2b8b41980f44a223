#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tdis/temporal_network.hpp"

using namespace tdis;

namespace {

std::set<std::tuple<node_t, node_t, time_t>> triple_set(const temporal_network& g)
{
    std::set<std::tuple<node_t, node_t, time_t>> s;
    for (const auto& c : g.contacts)
        s.insert({c.u, c.v, c.t});
    return s;
}

} // namespace

TEST_CASE("make_network canonicalizes")
{
    auto g = make_network(3, 5, {{2, 1, 4}, {0, 1, 0}, {1, 2, 4}, {1, 0, 0}});
    CHECK(g.n_contacts() == 2); // both duplicates collapse after pair ordering
    CHECK(g.contacts[0] == contact{0, 1, 0});
    CHECK(g.contacts[1] == contact{1, 2, 4});
    CHECK(std::is_sorted(g.contacts.begin(), g.contacts.end(), time_order));
}

TEST_CASE("make_network validates")
{
    CHECK_THROWS_AS(make_network(3, 5, {{1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_network(3, 5, {{0, 3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_network(3, 5, {{0, 1, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(make_network(3, 5, {{0, 1, -1}}), std::invalid_argument);
}

TEST_CASE("directed networks keep contact orientation")
{
    auto g = make_network(3, 5, {{2, 1, 4}, {1, 2, 4}}, true);
    CHECK(g.n_contacts() == 2);
}

TEST_CASE("aggregate deduplicates pairs")
{
    auto g = make_network(2, 5, {{0, 1, 0}, {0, 1, 5}});
    const auto s = aggregate(g);
    CHECK(s.n_edges() == 1);
    CHECK(s.edges[0] == std::pair<node_t, node_t>{0, 1});
}

TEST_CASE("aggregate of the hand-worked network")
{
    const auto s = aggregate(fixtures::network_a());
    CHECK(s.n_edges() == 4);
    CHECK(s.adjacency[0].size() == 2);
    CHECK(s.adjacency[2].size() == 2);
}

TEST_CASE("aggregate of an empty contact list")
{
    auto g = make_network(5, 3, {});
    const auto s = aggregate(g);
    CHECK(s.n_nodes == 5);
    CHECK(s.n_edges() == 0);
}

TEST_CASE("slice keeps the window and re-anchors time")
{
    const auto a = fixtures::network_a();
    const auto s = slice(a, 0, 2);
    CHECK(s.n_nodes == 4);
    CHECK(s.horizon == 1);
    CHECK(s.n_contacts() == 3);
    CHECK(triple_set(s) ==
          std::set<std::tuple<node_t, node_t, time_t>>{{0, 1, 0}, {0, 3, 1}, {1, 2, 1}});
}

TEST_CASE("slice restricts the node set")
{
    const auto a = fixtures::network_a();
    const auto s = slice(a, 2, 3);
    CHECK(s.n_nodes == 2);
    CHECK(s.n_contacts() == 1);
    CHECK(s.contacts[0] == contact{0, 1, 0});
    CHECK(s.node_labels == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("full-window slice is the identity")
{
    const auto a = fixtures::network_a();
    const auto s = slice(a, 0, a.horizon + 1);
    CHECK(s == a);
    CHECK(aggregate(s).edges == aggregate(a).edges);
}

TEST_CASE("slice with no contacts is an error")
{
    auto g = make_network(3, 9, {{0, 1, 0}, {1, 2, 9}});
    CHECK_THROWS_AS(slice(g, 2, 5), numeric_error);
    CHECK_THROWS_AS(slice(g, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(slice(g, 0, 11), std::invalid_argument);
}

TEST_CASE("slice can keep isolated nodes")
{
    const auto a = fixtures::network_a();
    const auto s = slice(a, 2, 3, true);
    CHECK(s.n_nodes == 4);
    CHECK(s.n_contacts() == 1);
    CHECK(s.contacts[0] == contact{2, 3, 0});
}

TEST_CASE("perturb with f = 0 is the identity")
{
    const auto a = fixtures::network_a();
    rng_t rng(7);
    CHECK(perturb(a, 0.0, rng) == a);
}

TEST_CASE("perturb deletes the requested fraction")
{
    const auto a = fixtures::network_a();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        rng_t rng(seed);
        const auto p = perturb(a, -0.5, rng);
        CHECK(p.n_contacts() == 2);
        const auto orig = triple_set(a);
        for (const auto& t : triple_set(p))
            CHECK(orig.count(t) == 1);
    }
}

TEST_CASE("perturb adds new contacts keeping the originals")
{
    const auto a = fixtures::network_a();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        rng_t rng(seed);
        const auto p = perturb(a, 0.5, rng);
        CHECK(p.n_contacts() == 6);
        const auto grown = triple_set(p);
        for (const auto& t : triple_set(a))
            CHECK(grown.count(t) == 1);
        for (const auto& c : p.contacts) {
            CHECK(c.t >= 0);
            CHECK(c.t <= a.horizon);
        }
    }
}

TEST_CASE("perturb add then remove the added contacts restores the original")
{
    const auto a = fixtures::network_a();
    rng_t rng(11);
    const auto p = perturb(a, 0.5, rng);
    const auto orig = triple_set(a);
    std::vector<contact> kept;
    for (const auto& c : p.contacts)
        if (orig.count({c.u, c.v, c.t}))
            kept.push_back(c);
    const auto restored = make_network(a.n_nodes, a.horizon, kept);
    CHECK(restored == a);
}

TEST_CASE("perturb rejects out-of-range and too-small fractions")
{
    const auto a = fixtures::network_a();
    rng_t rng(3);
    CHECK_THROWS_AS(perturb(a, 1.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(perturb(a, 0.1, rng), std::invalid_argument); // 0.1*4 < 1
}

TEST_CASE("perturb errors when no free slot exists")
{
    // N=2, horizon=0: the single (pair, t) slot is taken
    auto g = make_network(2, 0, {{0, 1, 0}});
    rng_t rng(5);
    CHECK_THROWS_AS(perturb(g, 1.0, rng), numeric_error);
}

TEST_CASE("perturbed networks stay canonical on random instances")
{
    rng_t rng(99);
    for (int it = 0; it < 50; ++it) {
        const auto g = fixtures::random_network(rng, 8, 6, 20);
        const double f = (it % 2 ? 0.5 : -0.5);
        const auto k = static_cast<std::size_t>(0.5 * static_cast<double>(g.n_contacts()));
        if (k < 1)
            continue;
        const auto slots = static_cast<std::uint64_t>(g.n_nodes) * (g.n_nodes - 1) / 2 *
                           (static_cast<std::uint64_t>(g.horizon) + 1);
        if (f > 0 && slots - g.n_contacts() < k)
            continue; // not enough free (pair, t) slots to add into
        rng_t prng(rng.u64());
        const auto p = perturb(g, f, prng);
        CHECK(std::is_sorted(p.contacts.begin(), p.contacts.end(), time_order));
        CHECK(p.n_nodes == g.n_nodes);
        CHECK(p.horizon == g.horizon);
        const auto s = triple_set(p);
        CHECK(s.size() == p.n_contacts()); // no duplicates
    }
}
