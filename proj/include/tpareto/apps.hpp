#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/solver.hpp"

// The prebuilt applications: thin interpretations of one solve each.
namespace tpareto {

// Step function mapping departure time to earliest arrival: departures up to
// steps[0].departure arrive at steps[0].arrival; departures in
// (steps[i].departure, steps[i+1].departure] arrive at steps[i+1].arrival;
// later departures do not reach the node.
struct profile_step {
    time_value departure = 0;
    time_value arrival = 0;
};

struct profile_function {
    std::vector<profile_step> steps; // departures and arrivals strictly increasing

    // earliest arrival when departing at or after t, if any
    std::optional<time_value> earliest_arrival(time_value t) const {
        for (const profile_step& s : steps)
            if (t <= s.departure) return s.arrival;
        return std::nullopt;
    }
};

template <class T>
using per_node = std::vector<T>; // indexed by node id

struct app_result_stats {
    solve_stats stats; // the underlying solve's instrumentation
};

inline per_node<profile_function> profile(const temporal_network& net, node_id source,
                                          time_value t0, solve_stats* stats = nullptr,
                                          zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    const auto res = solve(net, profile_cost{}, query{source, t0, false, policy});
    if (stats) *stats = res.stats;
    per_node<profile_function> out(net.node_count());
    for (node_id u = 0; u < net.node_count(); ++u)
        for (const auto& pair : res.sets[u])
            out[u].steps.push_back({pair.cost, pair.arrival}); // cost is the departure
    return out;
}

// Scalar answers read the cost of the last (best-cost) pair; an empty set
// means the node is unreachable.
template <cost_structure CS>
per_node<std::optional<typename CS::value_type>>
last_pair_cost(const temporal_network& net, const CS& cs, node_id source,
               time_value t0, solve_stats* stats = nullptr,
               zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    const auto res = solve(net, cs, query{source, t0, false, policy});
    if (stats) *stats = res.stats;
    per_node<std::optional<typename CS::value_type>> out(net.node_count());
    for (node_id u = 0; u < net.node_count(); ++u)
        if (!res.sets[u].empty()) out[u] = res.sets[u].back().cost;
    return out;
}

inline per_node<std::optional<std::int64_t>>
fewest_hops(const temporal_network& net, node_id source, time_value t0,
            solve_stats* stats = nullptr,
            zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    return last_pair_cost(net, hops_cost{}, source, t0, stats, policy);
}

inline per_node<std::optional<time_value>>
shortest_delay(const temporal_network& net, node_id source, time_value t0,
               solve_stats* stats = nullptr,
               zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    return last_pair_cost(net, delay_cost{}, source, t0, stats, policy);
}

inline per_node<std::optional<double>>
max_reliability(const temporal_network& net, node_id source, time_value t0,
                solve_stats* stats = nullptr,
                zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    return last_pair_cost(net, maxprod_cost{}, source, t0, stats, policy);
}

inline per_node<std::optional<double>>
min_max(const temporal_network& net, node_id source, time_value t0,
        solve_stats* stats = nullptr,
        zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    return last_pair_cost(net, minmax_cost{}, source, t0, stats, policy);
}

struct fastest_answer {
    time_value duration = 0;
    std::int64_t hops = 0;
};

// Fewest hops among the minimum-duration paths: solve under lex(profile,
// hops) and scan each set for minimal arrival - departure; duration ties
// prefer fewer hops, then later departure.
inline per_node<std::optional<fastest_answer>>
shortest_fastest(const temporal_network& net, node_id source, time_value t0,
                 solve_stats* stats = nullptr,
                 zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    const lex_cost<profile_cost, hops_cost> cs;
    const auto res = solve(net, cs, query{source, t0, false, policy});
    if (stats) *stats = res.stats;

    per_node<std::optional<fastest_answer>> out(net.node_count());
    for (node_id u = 0; u < net.node_count(); ++u) {
        std::optional<fastest_answer> best;
        std::optional<time_value> best_dep;
        for (const auto& pair : res.sets[u]) {
            const auto [dep, hop_count] = pair.cost;
            const time_value duration = pair.arrival - dep;
            const bool better = !best ||
                duration < best->duration ||
                (duration == best->duration && hop_count < best->hops) ||
                (duration == best->duration && hop_count == best->hops && dep > *best_dep);
            if (better) {
                best = fastest_answer{duration, hop_count};
                best_dep = dep;
            }
        }
        out[u] = best;
    }
    return out;
}

} // namespace tpareto
