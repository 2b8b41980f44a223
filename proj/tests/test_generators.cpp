#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "tdis/generators.hpp"

using namespace tdis;

TEST_CASE("uniform activities cover (0, a_max] with the right mean")
{
    activity_spec spec;
    spec.a_max = 1.0;
    rng_t rng(1);
    const int n = 10000;
    const auto a = sample_activities(spec, n, rng);
    double mean = 0.0;
    for (const double x : a) {
        CHECK(x > 0.0);
        CHECK(x <= 1.0);
        mean += x;
    }
    mean /= n;
    const double sigma = std::sqrt(1.0 / 12.0 / n);
    CHECK(std::abs(mean - 0.5) < 3.0 * sigma);
}

TEST_CASE("power-law activities respect the cutoff support")
{
    activity_spec spec;
    spec.kind = activity_spec::dist::power_law;
    spec.exponent = 3.0;
    spec.eps = 1e-3;
    rng_t rng(2);
    for (const double x : sample_activities(spec, 10000, rng)) {
        CHECK(x >= 1e-3);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("power-law activities match the analytic cdf")
{
    activity_spec spec;
    spec.kind = activity_spec::dist::power_law;
    spec.exponent = 3.0;
    spec.eps = 1e-3;
    rng_t rng(3);
    auto a = sample_activities(spec, 10000, rng);
    std::sort(a.begin(), a.end());
    const double e = std::pow(spec.eps, 1.0 - spec.exponent);
    double d_max = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double cdf = (std::pow(a[i], 1.0 - spec.exponent) - e) / (1.0 - e);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(a.size());
        const double lo = static_cast<double>(i) / static_cast<double>(a.size());
        d_max = std::max({d_max, std::abs(cdf - hi), std::abs(cdf - lo)});
    }
    CHECK(d_max < 0.02);
}

TEST_CASE("activity sampling validates parameters")
{
    rng_t rng(4);
    activity_spec bad_exponent;
    bad_exponent.kind = activity_spec::dist::power_law;
    bad_exponent.exponent = 2.0;
    CHECK_THROWS_AS(sample_activities(bad_exponent, 10, rng), std::invalid_argument);

    activity_spec bad_amax;
    bad_amax.a_max = 0.0;
    CHECK_THROWS_AS(sample_activities(bad_amax, 10, rng), std::invalid_argument);

    activity_spec bad_eps;
    bad_eps.kind = activity_spec::dist::power_law;
    bad_eps.eps = 1.0;
    CHECK_THROWS_AS(sample_activities(bad_eps, 10, rng), std::invalid_argument);
}

TEST_CASE("no activity, no contacts")
{
    rng_t rng(5);
    const std::vector<double> a(10, 0.0);
    CHECK(activity_driven(10, 100, 2, a, rng).n_contacts() == 0);
}

TEST_CASE("two always-active nodes merge into one contact per step")
{
    rng_t rng(6);
    const std::vector<double> a{1.0, 1.0};
    const auto g = activity_driven(2, 4, 1, a, rng);
    REQUIRE(g.n_contacts() == 5);
    for (time_t t = 0; t <= 4; ++t)
        CHECK(g.contacts[static_cast<std::size_t>(t)] == contact{0, 1, t});
}

TEST_CASE("generated networks are valid and reproducible")
{
    const std::vector<double> a(30, 0.2);
    rng_t r1(77), r2(77);
    const auto g1 = activity_driven(30, 50, 3, a, r1);
    const auto g2 = activity_driven(30, 50, 3, a, r2);
    CHECK(g1 == g2);

    std::set<std::tuple<node_t, node_t, time_t>> seen;
    for (const auto& c : g1.contacts) {
        CHECK(c.u != c.v);
        CHECK(c.t >= 0);
        CHECK(c.t <= 50);
        CHECK(seen.insert({c.u, c.v, c.t}).second);
    }
}

TEST_CASE("generator validates parameters")
{
    rng_t rng(8);
    const std::vector<double> a(5, 0.5);
    CHECK_THROWS_AS(activity_driven(5, 10, 5, a, rng), std::invalid_argument);
    CHECK_THROWS_AS(activity_driven(5, 10, 0, a, rng), std::invalid_argument);
    CHECK_THROWS_AS(activity_driven(6, 10, 2, a, rng), std::invalid_argument);
}

TEST_CASE("contact volume tracks total activity")
{
    // sparse regime: within-step pair merging is negligible, so the contact
    // count is a 3-sigma binomial check on N * a * m activations per step
    const int n = 200;
    const double act = 0.01;
    const time_t horizon = 399;
    const std::vector<double> a(n, act);
    rng_t rng(9);
    const auto g = activity_driven(n, horizon, 1, a, rng);
    const double expected = n * act * static_cast<double>(horizon + 1);
    const double sigma = std::sqrt(expected * (1.0 - act));
    CHECK(std::abs(static_cast<double>(g.n_contacts()) - expected) < 3.0 * sigma);
}

TEST_CASE("contact volume per step matches an independent simulation")
{
    /* independent Monte-Carlo: simulate activations and per-step pair merging
     * with separate code and rng, compare mean contacts per step within 5% */
    const int n = 300;
    const int m = 3;
    const time_t horizon = 100;

    rng_t rng(10);
    activity_spec spec;
    const auto acts = sample_activities(spec, n, rng);
    const auto g = activity_driven(n, horizon, m, acts, rng);
    const double mean_measured =
        static_cast<double>(g.n_contacts()) / static_cast<double>(horizon + 1);

    std::mt19937_64 eng(4321);
    auto unit = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    double total = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        std::set<std::pair<int, int>> pairs; // merged across the whole step
        for (int i = 0; i < n; ++i) {
            if (unit() >= acts[static_cast<std::size_t>(i)])
                continue;
            std::set<int> partners;
            while (partners.size() < static_cast<std::size_t>(m)) {
                const int j = static_cast<int>(unit() * (n - 1));
                partners.insert(j >= i ? j + 1 : j);
            }
            for (const int p : partners)
                pairs.insert({std::min(i, p), std::max(i, p)});
        }
        total += static_cast<double>(pairs.size());
    }
    const double mean_oracle = total / 200.0;
    CHECK(std::abs(mean_measured - mean_oracle) / mean_oracle < 0.05);
}
