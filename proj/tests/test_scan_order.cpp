#include <doctest.h>

#include <unordered_map>

#include "tpareto/errors.hpp"
#include "tpareto/oracle.hpp"
#include "tpareto/scan_order.hpp"
#include "tpareto/snapshot.hpp"
#include "support.hpp"

using namespace tpareto;

namespace {

// linear check of the scan-order invariants
void check_invariants(const temporal_network& net, const scan_order& so) {
    std::unordered_map<time_value, std::unordered_map<node_id, std::uint32_t>> ranks;
    for (time_value t : zero_snapshot_times(net)) {
        auto& m = ranks[t];
        for (const auto& [node, r] : detail::scc_ranks(make_zero_snapshot(net, t)))
            m.emplace(node, r);
    }
    for (std::size_t i = 0; i + 1 < so.order.size(); ++i) {
        const temporal_edge& a = net.edges[so.order[i]];
        const temporal_edge& b = net.edges[so.order[i + 1]];
        CHECK(a.arrival() <= b.arrival());
        if (a.arrival() == b.arrival()) CHECK((a.delay > 0 || b.delay == 0));
        if (a.arrival() == b.arrival() && a.delay == 0 && b.delay == 0) {
            const auto& m = ranks.at(a.dep);
            CHECK(m.at(a.tail) <= m.at(b.tail));
        }
    }
    for (edge_id e : so.order) CHECK(net.edges[e].dep >= so.t0);
}

} // namespace

TEST_CASE("scan order of the example network") {
    temporal_network net = test::example_network();

    scan_order so = build_scan_order(net, 0);
    REQUIRE(so.order.size() == 12);
    // unique earliest arrival-3 edge given input order: (u1,u4,1,2)
    CHECK(net.edges[so.order.front()] ==
          temporal_edge{*net.find_node("u1"), *net.find_node("u4"), 1, 2});
    // last edges tie at arrival 13, both positive delay, order unconstrained
    CHECK(net.edges[so.order.back()].arrival() == 13);
    check_invariants(net, so);

    scan_order filtered = build_scan_order(net, 4);
    CHECK(filtered.order.size() == 8); // departures {1,2,3,3} are excluded
    check_invariants(net, filtered);
}

TEST_CASE("zero-delay edges follow the snapshot topology") {
    temporal_network net = build_network({{"b", "c", 5, 0, std::nullopt},
                                          {"a", "b", 5, 0, std::nullopt}});
    scan_order so = build_scan_order(net, 0);
    REQUIRE(so.order.size() == 2);
    CHECK(so.order[0] == 1); // (a,b) must precede (b,c), against input order
    CHECK(so.order[1] == 0);
}

TEST_CASE("cyclic snapshot is rejected unless closure is asserted") {
    temporal_network net = build_network({{"a", "b", 5, 0, std::nullopt},
                                          {"b", "a", 5, 0, std::nullopt},
                                          {"b", "c", 5, 0, std::nullopt}});
    CHECK_THROWS_WITH_AS(build_scan_order(net, 0), doctest::Contains("t=5"), model_error);

    scan_order so = build_scan_order(net, 0, zero_delay_policy::assume_transitively_closed);
    REQUIRE(so.order.size() == 3);
    // SCC {a,b} precedes {c}; the inside edges come before the edge leaving
    CHECK(net.edges[so.order[2]].head == *net.find_node("c"));
    check_invariants(net, so);
}

TEST_CASE("cyclic snapshots below t0 sit outside the scanned window") {
    temporal_network net = build_network({{"a", "b", 5, 0, std::nullopt},
                                          {"b", "a", 5, 0, std::nullopt},
                                          {"x", "y", 9, 1, std::nullopt}});
    CHECK_THROWS_AS(build_scan_order(net, 0), model_error);
    scan_order so = build_scan_order(net, 6); // the t=5 snapshot is filtered out
    REQUIRE(so.order.size() == 1);
    CHECK(net.edges[so.order[0]].dep == 9);
}

TEST_CASE("inside-SCC edges precede edges leaving the SCC") {
    temporal_network net = build_network({{"b", "c", 7, 0, std::nullopt},  // leaves {a,b}
                                          {"a", "b", 7, 0, std::nullopt},  // inside
                                          {"b", "a", 7, 0, std::nullopt}}); // inside
    scan_order so = build_scan_order(net, 0, zero_delay_policy::assume_transitively_closed);
    REQUIRE(so.order.size() == 3);
    CHECK(so.order[2] == 0);
    CHECK(so.order[0] == 1); // inside edges keep input order
    CHECK(so.order[1] == 2);
}

TEST_CASE("scan-order invariants hold on random networks") {
    oracle::random_network_spec spec;
    spec.node_count = 7;
    spec.edge_count = 25;
    spec.max_delay = 3;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        spec.seed = seed;
        temporal_network net = oracle::generate_network(spec);
        check_invariants(net, build_scan_order(net, 0));
        check_invariants(net, build_scan_order(net, 10));
    }
}
