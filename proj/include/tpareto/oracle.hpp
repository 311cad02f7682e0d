#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/errors.hpp"
#include "tpareto/network.hpp"

// Ground-truth Pareto sets by exhaustive temporal-path enumeration. This
// module deliberately shares nothing with the scan solver beyond the domain
// types: no cost-based pruning is applied during the search, only the final
// domination filter, so a solver bug cannot leak in through shared machinery.
namespace tpareto::oracle {

// Calls cb(path_edges) for every temporal path from source whose first
// departure is >= t0, respecting the chaining rule dep_i >= dep_{i-1} +
// delay_{i-1}. Finite whenever the zero snapshots are acyclic. Throws
// input_error past max_expansions edge traversals.
//
// forbid_edge_reuse restricts the walk to paths without repeated edges,
// which keeps the enumeration finite even on cyclic zero snapshots; on cost
// transitively closed networks the Pareto values are unchanged, since any
// value is attained by a path with at most one edge per snapshot SCC.
template <class F>
void for_each_path(const temporal_network& net, node_id source, time_value t0,
                   F&& cb, std::size_t max_expansions = 10'000'000,
                   bool forbid_edge_reuse = false) {
    // per-node out-edges sorted by departure, for early cutoff
    std::vector<std::vector<edge_id>> out(net.node_count());
    for (edge_id e = 0; e < net.edges.size(); ++e)
        out[net.edges[e].tail].push_back(e);
    for (auto& v : out)
        std::sort(v.begin(), v.end(), [&](edge_id a, edge_id b) {
            return net.edges[a].dep < net.edges[b].dep;
        });

    std::size_t expansions = 0;
    std::vector<edge_id> path;
    std::vector<bool> used(forbid_edge_reuse ? net.edges.size() : 0);

    // (node, ready time, next out-edge position)
    struct frame {
        node_id at;
        time_value ready;
        std::size_t pos;
    };
    std::vector<frame> stack{{source, t0, 0}};
    while (!stack.empty()) {
        frame& f = stack.back();
        const auto& candidates = out[f.at];
        bool descended = false;
        while (f.pos < candidates.size()) {
            const edge_id e = candidates[f.pos++];
            if (net.edges[e].dep < f.ready) continue;
            if (forbid_edge_reuse && used[e]) continue;
            if (++expansions > max_expansions)
                throw input_error("oracle path enumeration exceeded the expansion cap; "
                                  "use a smaller instance");
            path.push_back(e);
            if (forbid_edge_reuse) used[e] = true;
            cb(static_cast<const std::vector<edge_id>&>(path));
            stack.push_back({net.edges[e].head, net.edges[e].arrival(), 0});
            descended = true;
            break;
        }
        if (!descended) {
            stack.pop_back();
            if (!path.empty()) {
                if (forbid_edge_reuse) used[path.back()] = false;
                path.pop_back();
            }
        }
    }
}

// Domination filter: keep the pairs not dominated per (t1 < t2 and c1 <= c2)
// or (t1 <= t2 and c1 < c2). Idempotent.
template <cost_structure CS>
std::vector<std::pair<time_value, typename CS::value_type>>
pareto_filter(const CS& cs,
              std::vector<std::pair<time_value, typename CS::value_type>> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return cost_less(cs, a.second, b.second); // best cost first within a tie
    });
    std::vector<std::pair<time_value, typename CS::value_type>> front;
    for (auto& p : pairs) {
        if (front.empty() || cost_less(cs, p.second, front.back().second))
            front.push_back(std::move(p));
    }
    return front;
}

// Exact Pareto sets per node: every path's (arrival, cost) is collected, the
// domination rule is applied afterwards, and the survivors are sorted by
// arrival. Matches the solver's output representation exactly.
template <cost_structure CS>
std::vector<std::vector<std::pair<time_value, typename CS::value_type>>>
enumerate_pareto(const temporal_network& net, const CS& cs, node_id source,
                 time_value t0, std::size_t max_expansions = 10'000'000) {
    using C = typename CS::value_type;
    std::vector<std::vector<std::pair<time_value, C>>> reached(net.node_count());

    std::vector<C> fold; // cost prefix per path depth
    for_each_path(net, source, t0, [&](const std::vector<edge_id>& path) {
        const edge_id last = path.back();
        fold.resize(path.size() - 1);
        C cost = path.size() == 1
            ? cs.edge_cost(net, last)
            : cs.combine(fold.back(), cs.edge_cost(net, last));
        fold.push_back(cost);
        reached[net.edges[last].head].emplace_back(net.edges[last].arrival(), std::move(cost));
    }, max_expansions);

    for (auto& pairs : reached) pairs = pareto_filter(cs, std::move(pairs));
    return reached;
}

// Deterministic small-network generator for property tests. Zero-delay edges
// are resampled until every zero snapshot is acyclic.
struct random_network_spec {
    std::uint32_t node_count = 6;  // oracle targets n <= 8
    std::uint32_t edge_count = 20; // <= 30
    time_value min_time = 0;
    time_value max_time = 20;
    time_value min_delay = 0;
    time_value max_delay = 5;
    std::uint32_t shared_zero_edges = 0; // force >= k zero-delay edges at one departure
    bool with_costs = true;             // raw costs in (0,1], two decimals
    std::uint64_t seed = 0;
};

temporal_network generate_network(const random_network_spec& spec);

} // namespace tpareto::oracle
