#include <doctest.h>

#include <limits>

#include "tpareto/oracle.hpp"
#include "tpareto/solver.hpp"
#include "support.hpp"

using namespace tpareto;

namespace {

constexpr time_value no_bound = std::numeric_limits<time_value>::min();

// reverse-adapted enumeration: (departure, cost) of every path u -> dest,
// right-to-left cost fold, filtered by the latest-departure domination rule
template <cost_structure CS>
std::vector<std::pair<time_value, typename CS::value_type>>
reverse_oracle(const temporal_network& net, const CS& cs, node_id from, node_id dest,
               std::optional<time_value> deadline) {
    using C = typename CS::value_type;
    std::vector<std::pair<time_value, C>> found;
    oracle::for_each_path(net, from, no_bound, [&](const std::vector<edge_id>& path) {
        if (net.edges[path.back()].head != dest) return;
        if (deadline && net.edges[path.back()].arrival() > *deadline) return;
        C cost = cs.edge_cost(net, path.back());
        for (std::size_t i = path.size() - 1; i-- > 0;)
            cost = cs.combine(cs.edge_cost(net, path[i]), cost);
        found.emplace_back(-net.edges[path.front()].dep, std::move(cost));
    });
    auto front = oracle::pareto_filter(cs, std::move(found)); // in mirrored time
    std::vector<std::pair<time_value, C>> out;
    for (auto it = front.rbegin(); it != front.rend(); ++it)
        out.emplace_back(-it->first, it->second);
    return out;
}

} // namespace

TEST_CASE("example network, all-to-one hops into u5") {
    temporal_network net = test::example_network();
    auto res = solve_reverse(net, hops_cost{}, *net.find_node("u5"));

    using pairs = std::vector<std::pair<time_value, std::int64_t>>;
    // (depart 1, 2 hops) is dominated by (depart 7, 1 hop): later and cheaper
    CHECK(test::as_pairs(res.sets[*net.find_node("u1")]) == pairs{{7, 1}});
    CHECK(test::as_pairs(res.sets[*net.find_node("u2")]) == pairs{{11, 1}});
    CHECK(test::as_pairs(res.sets[*net.find_node("u3")]) == pairs{{12, 1}});
    CHECK(test::as_pairs(res.sets[*net.find_node("u4")]) == pairs{{8, 1}});
    CHECK(res.sets[*net.find_node("u5")].empty());
}

TEST_CASE("reverse fronts can hold several pairs") {
    // departing later into d needs more hops: both pairs survive
    temporal_network net = build_network({{"a", "d", 3, 1, std::nullopt},
                                          {"a", "b", 5, 1, std::nullopt},
                                          {"b", "d", 7, 1, std::nullopt}});
    auto res = solve_reverse(net, hops_cost{}, *net.find_node("d"));
    using pairs = std::vector<std::pair<time_value, std::int64_t>>;
    CHECK(test::as_pairs(res.sets[*net.find_node("a")]) == pairs{{3, 1}, {5, 2}});
    // the front trades departure against cost: later departure, worse cost
}

TEST_CASE("reverse respects the deadline") {
    temporal_network net = test::example_network();
    const node_id u1 = *net.find_node("u1");
    auto res = solve_reverse(net, hops_cost{}, *net.find_node("u5"), time_value{9});
    using pairs = std::vector<std::pair<time_value, std::int64_t>>;
    // arrivals after 9 are gone; departing 6 via u4 (arrive 9) is the latest
    CHECK(test::as_pairs(res.sets[u1]) == pairs{{6, 2}});
}

TEST_CASE("reverse on a network without edges") {
    temporal_network net;
    net.node_names = {"a", "d"};
    net.name_ids = {{"a", 0}, {"d", 1}};
    auto res = solve_reverse(net, hops_cost{}, 1);
    for (const auto& s : res.sets) CHECK(s.empty());

    // destination with no in-edges: nothing reaches it
    temporal_network only_out = build_network({{"d", "a", 1, 1, std::nullopt}});
    auto res2 = solve_reverse(only_out, hops_cost{}, *only_out.find_node("d"));
    for (const auto& s : res2.sets) CHECK(s.empty());
}

TEST_CASE("reverse path extraction walks the original edges") {
    temporal_network net = test::example_network();
    const node_id u1 = *net.find_node("u1");
    auto res = solve_reverse(net, hops_cost{}, *net.find_node("u5"), std::nullopt, true);
    auto path = extract_reverse_path(net, res, u1, 0);
    CHECK(path.edges == std::vector<edge_id>{3}); // (u1,u5,7,3)
    CHECK(path.departure == 7);
    CHECK(path.arrival == 10);

    auto deadline_res =
        solve_reverse(net, hops_cost{}, *net.find_node("u5"), time_value{9}, true);
    auto two_hop = extract_reverse_path(net, deadline_res, u1, 0);
    CHECK(two_hop.edges == std::vector<edge_id>{2, 11}); // (u1,u4,6,2), (u4,u5,8,1)
    CHECK(two_hop.departure == 6);
    CHECK(two_hop.arrival == 9);
    CHECK(two_hop.cost == 2);
}

TEST_CASE("reverse rejects structures without symmetric isotonicity") {
    temporal_network net = test::example_network();
    CHECK_THROWS_AS(solve_reverse(net, (lex_cost<profile_cost, hops_cost>{}),
                                  *net.find_node("u5")),
                    input_error);
}

TEST_CASE("reverse equals the reverse oracle and forward-profile duality") {
    oracle::random_network_spec spec;
    spec.node_count = 6;
    spec.edge_count = 18;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        spec.seed = seed;
        temporal_network net = oracle::generate_network(spec);
        const node_id dest = static_cast<node_id>(seed % spec.node_count);

        auto rev_hops = solve_reverse(net, hops_cost{}, dest);
        auto rev_delay = solve_reverse(net, delay_cost{}, dest);
        for (node_id u = 0; u < net.node_count(); ++u) {
            CHECK(test::as_pairs(rev_hops.sets[u]) ==
                  reverse_oracle(net, hops_cost{}, u, dest, std::nullopt));
            CHECK(test::as_pairs(rev_delay.sets[u]) ==
                  reverse_oracle(net, delay_cost{}, u, dest, std::nullopt));

            // duality: the greatest departure in the reverse front equals the
            // greatest departure among forward profile pairs reaching dest
            auto fwd = solve(net, profile_cost{}, query{u, no_bound});
            const auto& fwd_set = fwd.sets[dest];
            if (rev_hops.sets[u].empty()) {
                CHECK(fwd_set.empty());
            } else {
                REQUIRE_FALSE(fwd_set.empty());
                CHECK(rev_hops.sets[u].back().arrival == fwd_set.back().cost);
            }
        }
    }
}

TEST_CASE("reverse with a deadline equals the bounded reverse oracle") {
    oracle::random_network_spec spec;
    spec.node_count = 5;
    spec.edge_count = 15;
    for (std::uint64_t seed = 50; seed < 65; ++seed) {
        spec.seed = seed;
        temporal_network net = oracle::generate_network(spec);
        const node_id dest = static_cast<node_id>(seed % spec.node_count);
        const time_value deadline = 12;
        auto rev = solve_reverse(net, hops_cost{}, dest, deadline);
        for (node_id u = 0; u < net.node_count(); ++u)
            CHECK(test::as_pairs(rev.sets[u]) ==
                  reverse_oracle(net, hops_cost{}, u, dest, deadline));
    }
}
