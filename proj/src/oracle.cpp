#include "tpareto/oracle.hpp"

#include <random>

#include "tpareto/snapshot.hpp"

namespace tpareto::oracle {

temporal_network generate_network(const random_network_spec& spec) {
    std::mt19937_64 rng(spec.seed);
    auto rand_node = [&]() {
        return static_cast<node_id>(rng() % std::max<std::uint32_t>(spec.node_count, 1));
    };
    auto rand_in = [&](time_value lo, time_value hi) {
        return lo + static_cast<time_value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    temporal_network net;
    for (std::uint32_t u = 0; u < spec.node_count; ++u) {
        net.node_names.push_back("n" + std::to_string(u));
        net.name_ids.emplace(net.node_names.back(), u);
    }

    struct gen_edge {
        temporal_edge e;
        bool pinned_zero; // forced shared-time zero edge: only endpoints resample
    };
    std::vector<gen_edge> edges;

    auto sample_edge = [&]() {
        temporal_edge e;
        e.dep = rand_in(spec.min_time, spec.max_time);
        e.delay = rand_in(spec.min_delay, spec.max_delay);
        do {
            e.tail = rand_node();
            e.head = rand_node();
        } while (e.delay == 0 && e.tail == e.head);
        return e;
    };

    if (spec.edge_count > 0 && spec.node_count == 0)
        throw input_error("cannot generate edges without nodes");
    if (spec.edge_count > 0 && spec.node_count == 1 && spec.min_delay == 0)
        throw input_error("a single-node network admits only zero-delay self-loops");
    if (spec.shared_zero_edges > 0 && spec.node_count < 2)
        throw input_error("shared zero-delay edges need at least two nodes");

    if (spec.node_count > 0) {
        for (std::uint32_t i = 0; i < spec.edge_count; ++i)
            edges.push_back({sample_edge(), false});
        if (spec.shared_zero_edges > 0) {
            const time_value shared = rand_in(spec.min_time, spec.max_time);
            for (std::uint32_t i = 0; i < spec.shared_zero_edges; ++i) {
                temporal_edge e;
                e.dep = shared;
                e.delay = 0;
                do {
                    e.tail = rand_node();
                    e.head = rand_node();
                } while (e.tail == e.head);
                edges.push_back({e, true});
            }
        }
    }

    net.edges.reserve(edges.size());
    for (const gen_edge& g : edges) net.edges.push_back(g.e);

    // resample one cycle edge at a time until every snapshot is a DAG
    for (int rounds = 0; rounds < 100000; ++rounds) {
        const zero_acyclic_report rep = validate_zero_acyclic(net);
        if (rep.ok) break;
        const zero_cycle& bad = rep.cycles.front();
        auto on_cycle = [&bad](node_id u) {
            for (node_id c : bad.nodes)
                if (c == u) return true;
            return false;
        };
        for (edge_id i = 0; i < net.edges.size(); ++i) {
            const temporal_edge& e = net.edges[i];
            if (e.delay != 0 || e.dep != bad.time) continue;
            if (!on_cycle(e.tail) || !on_cycle(e.head)) continue;
            if (edges[i].pinned_zero) {
                do {
                    net.edges[i].tail = rand_node();
                    net.edges[i].head = rand_node();
                } while (net.edges[i].tail == net.edges[i].head);
            } else {
                net.edges[i] = sample_edge();
            }
            break;
        }
    }

    if (spec.with_costs) {
        net.raw_costs.reserve(net.edges.size());
        for (std::size_t i = 0; i < net.edges.size(); ++i)
            net.raw_costs.push_back(static_cast<double>(rand_in(1, 100)) / 100.0);
    }
    return net;
}

} // namespace tpareto::oracle
