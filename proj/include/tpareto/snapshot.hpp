#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/network.hpp"

namespace tpareto {

// Static graph of the zero-delay edges departing at one time, with the
// strongly connected components of that graph in topological order. The scan
// order requires every snapshot to be a DAG, or (when the caller asserts cost
// transitive closure) uses the SCC order.
struct zero_snapshot {
    time_value time = 0;
    std::vector<edge_id> edges;                   // dep == time && delay == 0, input order
    std::vector<std::vector<node_id>> scc_order;  // condensation in topological order
};

// All departure times that have at least one zero-delay edge, ascending.
std::vector<time_value> zero_snapshot_times(const temporal_network& net);

zero_snapshot make_zero_snapshot(const temporal_network& net, time_value t);

// Every non-empty snapshot, grouped in one pass over the edges (ascending by
// time). Linear in |E| overall, unlike calling make_zero_snapshot per time.
std::vector<zero_snapshot> all_zero_snapshots(const temporal_network& net);

struct zero_cycle {
    time_value time = 0;
    std::vector<node_id> nodes; // a cycle in the snapshot, first node not repeated
};

struct zero_acyclic_report {
    bool ok = true;
    std::vector<zero_cycle> cycles; // one witness per offending snapshot
};

// ok iff every zero snapshot is a DAG.
zero_acyclic_report validate_zero_acyclic(const temporal_network& net);

struct closure_violation {
    time_value time = 0;
    node_id a = no_node, b = no_node, c = no_node; // chain a->b->c with no good a->c shortcut
};

namespace detail {

// node -> position in scc_order for the snapshot's incident nodes
std::vector<std::pair<node_id, std::uint32_t>> scc_ranks(const zero_snapshot& snap);

} // namespace detail

// Checks that every SCC of every zero snapshot is cost transitively closed:
// each composable pair of inside-SCC edges a->b, b->c has an inside edge a->c
// whose cost is no worse than the combined cost. Precondition (trusted, not
// checked): combine is associative. Returns the first violating triple, or
// nullopt when the network is zero transitively closed.
template <cost_structure CS>
std::optional<closure_violation>
validate_zero_transitively_closed(const temporal_network& net, const CS& cs) {
    using V = typename CS::value_type;
    for (const zero_snapshot& snap : all_zero_snapshots(net)) {
        std::unordered_map<node_id, std::uint32_t> rank;
        for (const auto& [node, r] : detail::scc_ranks(snap)) rank.emplace(node, r);

        for (std::uint32_t scc = 0; scc < snap.scc_order.size(); ++scc) {
            std::vector<edge_id> inside;
            for (edge_id e : snap.edges) {
                const temporal_edge& ed = net.edges[e];
                if (rank.at(ed.tail) == scc && rank.at(ed.head) == scc)
                    inside.push_back(e);
            }
            if (inside.size() < 2) continue;

            // leq-minimal inside cost per (tail, head)
            std::unordered_map<std::uint64_t, V> shortcut;
            auto key = [](node_id u, node_id v) {
                return (static_cast<std::uint64_t>(u) << 32) | v;
            };
            for (edge_id e : inside) {
                V c = cs.edge_cost(net, e);
                auto [it, inserted] = shortcut.try_emplace(key(net.edges[e].tail, net.edges[e].head), c);
                if (!inserted && cost_less(cs, c, it->second)) it->second = std::move(c);
            }

            for (edge_id e1 : inside) {
                for (edge_id e2 : inside) {
                    if (e1 == e2) continue;
                    if (net.edges[e1].head != net.edges[e2].tail) continue;
                    const node_id a = net.edges[e1].tail;
                    const node_id b = net.edges[e1].head;
                    const node_id c = net.edges[e2].head;
                    V combined = cs.combine(cs.edge_cost(net, e1), cs.edge_cost(net, e2));
                    auto it = shortcut.find(key(a, c));
                    if (it == shortcut.end() || !cs.leq(it->second, combined))
                        return closure_violation{snap.time, a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace tpareto
