#include <doctest.h>

#include <cmath>
#include <random>

#include "tpareto/pareto_set.hpp"
#include "support.hpp"

using namespace tpareto;

namespace {

using set_t = pareto_set<std::int64_t>;
const hops_cost hops; // plain integer order, fine for exercising the set

set_t make_set(std::initializer_list<std::pair<time_value, std::int64_t>> pairs) {
    set_t ps;
    for (const auto& [t, c] : pairs) ps.update(hops, t, c);
    return ps;
}

// reference for latest_at_or_before
int linear_latest(const set_t& ps, time_value tau) {
    int best = -1;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].arrival <= tau) best = static_cast<int>(i);
    return best;
}

} // namespace

TEST_CASE("update_ps branches") {
    set_t ps;
    CHECK(ps.update(hops, 5, 3) == update_outcome::appended); // empty set
    CHECK(ps.size() == 1);

    CHECK(ps.update(hops, 8, 2) == update_outcome::appended); // better cost, later arrival
    CHECK(test::as_pairs(ps) ==
          std::vector<std::pair<time_value, std::int64_t>>{{5, 3}, {8, 2}});

    CHECK(ps.update(hops, 8, 1) == update_outcome::replaced); // better cost, same arrival
    CHECK(test::as_pairs(ps) ==
          std::vector<std::pair<time_value, std::int64_t>>{{5, 3}, {8, 1}});

    CHECK(ps.update(hops, 9, 4) == update_outcome::ignored); // dominated
    CHECK(ps.update(hops, 9, 1) == update_outcome::ignored); // equal cost is no improvement
    CHECK(ps.size() == 2);

    set_t replace_only = make_set({{5, 3}});
    CHECK(replace_only.update(hops, 5, 2) == update_outcome::replaced);
    CHECK(test::as_pairs(replace_only) ==
          std::vector<std::pair<time_value, std::int64_t>>{{5, 2}});

    CHECK_THROWS_AS(ps.update(hops, 0, 0), std::logic_error); // below the frontier
}

TEST_CASE("latest_at_or_before examples") {
    set_t ps = make_set({{1, 9}, {4, 7}, {6, 2}});

    lookup_result r = ps.latest_at_or_before(5);
    REQUIRE(r.found);
    CHECK(ps[r.index].arrival == 4);
    CHECK(ps[r.index].cost == 7);

    r = ps.latest_at_or_before(6);
    REQUIRE(r.found);
    CHECK(ps[r.index].arrival == 6);

    set_t single = make_set({{1, 9}});
    CHECK_FALSE(single.latest_at_or_before(0).found);

    CHECK_FALSE(set_t{}.latest_at_or_before(100).found);
    CHECK(set_t{}.latest_at_or_before(100).probes == 0);
}

TEST_CASE("lookup equals the linear reference and respects the probe bound") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 10'000; ++round) {
        set_t ps;
        const std::size_t n = rng() % 40;
        time_value t = 0;
        std::int64_t cost = 1'000'000;
        for (std::size_t i = 0; i < n; ++i) {
            t += 1 + static_cast<time_value>(rng() % 5);
            cost -= 1 + static_cast<std::int64_t>(rng() % 3);
            ps.update(hops, t, cost);
        }
        REQUIRE(ps.size() == n);

        const time_value tau = static_cast<time_value>(rng() % (6 * (n + 2)));
        const lookup_result r = ps.latest_at_or_before(tau);
        const int ref = linear_latest(ps, tau);
        CHECK(r.found == (ref >= 0));
        if (r.found) CHECK(r.index == static_cast<std::uint32_t>(ref));

        // probes <= 2 ceil(log2(d + 2)) + 2 with d = #pairs later than tau
        const std::size_t d = ps.size() - static_cast<std::size_t>(ref + 1);
        const double bound = 2.0 * std::ceil(std::log2(static_cast<double>(d) + 2.0)) + 2.0;
        CHECK(static_cast<double>(r.probes) <= bound);
    }
}

TEST_CASE("update sequences with monotone arrivals keep the invariants") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 2'000; ++round) {
        set_t ps;
        time_value t = 0;
        for (int step = 0; step < 60; ++step) {
            t += static_cast<time_value>(rng() % 3); // may repeat the frontier arrival
            ps.update(hops, t, static_cast<std::int64_t>(rng() % 50));
        }
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
            CHECK(ps[i].arrival < ps[i + 1].arrival);   // strictly increasing
            CHECK(ps[i + 1].cost < ps[i].cost);         // strictly improving
        }
    }
}
