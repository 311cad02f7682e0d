#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/errors.hpp"
#include "tpareto/network.hpp"
#include "tpareto/pareto_set.hpp"
#include "tpareto/scan_order.hpp"

namespace tpareto {

struct query {
    node_id source = 0;
    time_value t0 = 0;
    bool track_paths = false;
    zero_delay_policy zero_policy = zero_delay_policy::require_acyclic;
};

struct solve_stats {
    std::size_t max_pairs_per_node = 0; // P
    std::size_t max_edge_complexity = 0; // K = max K_e observed
    std::size_t total_pairs = 0;
    std::size_t total_probes = 0;
};

// Per scanned edge: K_e (pairs at the tail with arrival in (tau, tau+delta],
// counted at probe time) and the probes the lookup spent.
struct probe_record {
    edge_id edge = no_edge;
    std::uint32_t complexity = 0;
    std::uint32_t probes = 0;
};

template <class C>
struct solve_result {
    std::vector<pareto_set<C>> sets; // one Pareto set per node
    solve_stats stats;
    std::vector<probe_record> probe_trace; // one record per scanned edge
    bool paths_tracked = false;
};

// Single scan over the edges in scan order. For each edge e = (u,v,tau,delta):
// if u is the source, offer (tau+delta, gamma(e)) to v's set; then, if u's set
// has a pair with arrival <= tau, offer (tau+delta, c_u (+) gamma(e)) built
// from the latest such pair. Pareto sets only ever grow at the frontier, so
// both offers go through update_ps.
template <cost_structure CS>
solve_result<typename CS::value_type> solve(const temporal_network& net,
                                            const CS& cs, const query& q) {
    using C = typename CS::value_type;
    if (q.source >= net.node_count())
        throw input_error("source node id out of range");
    if (cs.needs_raw_cost() && !net.has_raw_costs())
        throw input_error("cost structure '" + cs.name() + "' needs a raw cost column");

    const scan_order so = build_scan_order(net, q.t0, q.zero_policy);

    solve_result<C> res;
    res.sets.resize(net.node_count());
    res.paths_tracked = q.track_paths;
    res.probe_trace.reserve(so.order.size());

    for (edge_id e : so.order) {
        const temporal_edge& ed = net.edges[e];
        const C gamma_e = cs.edge_cost(net, e);
        const time_value arr = ed.arrival();

        if (ed.tail == q.source)
            res.sets[ed.head].update(cs, arr, gamma_e,
                                     q.track_paths ? e : no_edge, no_node, 0);

        const pareto_set<C>& tail_set = res.sets[ed.tail];
        const lookup_result hit = tail_set.latest_at_or_before(ed.dep);
        const std::uint32_t k_e = static_cast<std::uint32_t>(
            tail_set.size() - (hit.found ? hit.index + 1 : 0));
        res.probe_trace.push_back({e, k_e, hit.probes});
        res.stats.total_probes += hit.probes;
        res.stats.max_edge_complexity = std::max<std::size_t>(res.stats.max_edge_complexity, k_e);

        if (hit.found)
            res.sets[ed.head].update(cs, arr,
                                     cs.combine(tail_set[hit.index].cost, gamma_e),
                                     q.track_paths ? e : no_edge,
                                     q.track_paths ? ed.tail : no_node, hit.index);
    }

    for (const pareto_set<C>& ps : res.sets) {
        res.stats.total_pairs += ps.size();
        res.stats.max_pairs_per_node = std::max(res.stats.max_pairs_per_node, ps.size());
    }
    return res;
}

template <class C>
struct extracted_path {
    std::vector<edge_id> edges;
    time_value departure = 0;
    time_value arrival = 0;
    C cost{};
};

// Backward reconstruction through the pair pointers; iterative, so long paths
// cannot exhaust the stack.
template <class C>
extracted_path<C> extract_path(const temporal_network& net,
                               const solve_result<C>& result, node_id node,
                               std::size_t pair_index) {
    if (!result.paths_tracked)
        throw input_error("path extraction requires a solve with track_paths");
    if (node >= result.sets.size() || pair_index >= result.sets[node].size())
        throw input_error("path extraction: no such pair");

    extracted_path<C> path;
    const pareto_pair<C>* pair = &result.sets[node][pair_index];
    path.arrival = pair->arrival;
    path.cost = pair->cost;
    for (;;) {
        path.edges.push_back(pair->via_edge);
        if (!pair->has_pred()) break;
        pair = &result.sets[pair->pred_node][pair->pred_index];
    }
    std::reverse(path.edges.begin(), path.edges.end());
    path.departure = net.edges[path.edges.front()].dep;
    return path;
}

// All-to-one latest-departure solve, realized on a time-mirrored network:
// every edge (u,v,tau,delta) becomes (v,u,-(tau+delta),delta), the combine
// arguments are flipped, and the forward scan then enumerates edges by
// decreasing departure, positive delay first, reverse-topological among
// zero-delay ties. Requires the symmetric isotonicity property of the cost
// structure (c1 <= c2 implies c (+) c1 <= c (+) c2).
template <class C>
struct reverse_result {
    // Per node: (departure, cost) pairs sorted by increasing departure. On
    // this front a later departure always carries a strictly worse cost; the
    // last pair has the greatest departure. Pointer fields support
    // extract_reverse_path when tracked.
    std::vector<std::vector<pareto_pair<C>>> sets;
    solve_stats stats;
    bool paths_tracked = false;
};

namespace detail {

// Sampled precondition for the all-to-one solve: symmetric isotonicity over a
// pool of values drawn from the network's own edge costs and their combines.
// A pass does not prove the law, but a stray structure (e.g. lex:profile,...)
// is rejected before it can produce silently wrong fronts.
template <cost_structure CS>
void check_reverse_precondition(const temporal_network& net, const CS& cs) {
    using V = typename CS::value_type;
    std::vector<V> pool;
    for (edge_id e = 0; e < net.edges.size() && pool.size() < 12; ++e) {
        V v = cs.edge_cost(net, e);
        bool fresh = true;
        for (const V& p : pool)
            if (p == v) fresh = false;
        if (fresh) pool.push_back(std::move(v));
    }
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i < base && pool.size() < 24; ++i)
        for (std::size_t j = 0; j < base && pool.size() < 24; ++j)
            pool.push_back(cs.combine(pool[i], pool[j]));

    for (const V& a : pool)
        for (const V& b : pool) {
            if (!cs.leq(a, b)) continue;
            for (const V& c : pool)
                if (!cs.leq(cs.combine(c, a), cs.combine(c, b)))
                    throw input_error(
                        "cost structure '" + cs.name() +
                        "' violates the symmetric isotonicity property needed by the "
                        "all-to-one solve (a=" + cs.value_text(a) + " b=" +
                        cs.value_text(b) + " c=" + cs.value_text(c) + ")");
        }
}

template <cost_structure CS>
struct mirrored_cost {
    using value_type = typename CS::value_type;
    const CS* base;
    const temporal_network* original;
    const std::vector<edge_id>* to_original;

    value_type edge_cost(const temporal_network&, edge_id e) const {
        return base->edge_cost(*original, (*to_original)[e]);
    }
    value_type combine(const value_type& a, const value_type& b) const {
        return base->combine(b, a); // fold right-to-left along the original path
    }
    bool leq(const value_type& a, const value_type& b) const { return base->leq(a, b); }
    bool needs_raw_cost() const { return false; } // reads through the original network
    std::string name() const { return base->name(); }
    std::string value_text(const value_type& v) const { return base->value_text(v); }
};

} // namespace detail

template <cost_structure CS>
reverse_result<typename CS::value_type>
solve_reverse(const temporal_network& net, const CS& cs, node_id destination,
              std::optional<time_value> deadline = std::nullopt,
              bool track_paths = false,
              zero_delay_policy policy = zero_delay_policy::require_acyclic) {
    using C = typename CS::value_type;
    if (destination >= net.node_count())
        throw input_error("destination node id out of range");
    if (cs.needs_raw_cost() && !net.has_raw_costs())
        throw input_error("cost structure '" + cs.name() + "' needs a raw cost column");
    detail::check_reverse_precondition(net, cs);

    temporal_network mirror;
    mirror.node_names = net.node_names;
    mirror.name_ids = net.name_ids;
    std::vector<edge_id> to_original;
    to_original.reserve(net.edges.size());
    mirror.edges.reserve(net.edges.size());
    for (edge_id e = 0; e < net.edges.size(); ++e) {
        const temporal_edge& ed = net.edges[e];
        mirror.edges.push_back({ed.head, ed.tail, -ed.arrival(), ed.delay});
        to_original.push_back(e);
    }

    const detail::mirrored_cost<CS> mcs{&cs, &net, &to_original};
    query mq;
    mq.source = destination;
    // the deadline filter (drop arrivals past the deadline) mirrors the t0 filter
    mq.t0 = deadline ? -*deadline : std::numeric_limits<time_value>::min();
    mq.track_paths = track_paths;
    mq.zero_policy = policy;
    const solve_result<C> mres = solve(mirror, mcs, mq);

    reverse_result<C> res;
    res.paths_tracked = track_paths;
    res.stats = mres.stats;
    res.sets.resize(net.node_count());
    std::vector<std::size_t> sizes(net.node_count());
    for (node_id u = 0; u < net.node_count(); ++u) sizes[u] = mres.sets[u].size();
    for (node_id u = 0; u < net.node_count(); ++u) {
        auto& out = res.sets[u];
        const auto& in = mres.sets[u];
        out.reserve(in.size());
        for (std::size_t i = in.size(); i-- > 0;) {
            pareto_pair<C> p = in[i];
            p.arrival = -p.arrival; // departure of the original path
            if (p.via_edge != no_edge) p.via_edge = to_original[p.via_edge];
            if (p.has_pred())
                p.pred_index = static_cast<std::uint32_t>(sizes[p.pred_node] - 1 - p.pred_index);
            out.push_back(std::move(p));
        }
    }
    return res;
}

// Path extraction for reverse results: the pointer chain from a pair at u
// already enumerates the original edges in path order u -> ... -> destination.
template <class C>
extracted_path<C> extract_reverse_path(const temporal_network& net,
                                       const reverse_result<C>& result,
                                       node_id node, std::size_t pair_index) {
    if (!result.paths_tracked)
        throw input_error("path extraction requires a solve with track_paths");
    if (node >= result.sets.size() || pair_index >= result.sets[node].size())
        throw input_error("path extraction: no such pair");

    extracted_path<C> path;
    const pareto_pair<C>* pair = &result.sets[node][pair_index];
    path.departure = pair->arrival; // holds the departure in reverse results
    path.cost = pair->cost;
    for (;;) {
        path.edges.push_back(pair->via_edge);
        if (!pair->has_pred()) break;
        pair = &result.sets[pair->pred_node][pair->pred_index];
    }
    path.arrival = net.edges[path.edges.back()].arrival();
    return path;
}

} // namespace tpareto
