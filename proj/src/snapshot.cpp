#include "tpareto/snapshot.hpp"

#include <algorithm>

namespace tpareto {

namespace {

// Tarjan over the snapshot subgraph. Emits SCCs in reverse topological order
// of the condensation; callers reverse to get a topological order.
struct tarjan {
    const std::vector<node_id>& nodes;                       // incident nodes, ascending
    const std::unordered_map<node_id, std::vector<node_id>>& adj;

    std::unordered_map<node_id, std::uint32_t> index, low;
    std::unordered_map<node_id, bool> on_stack;
    std::vector<node_id> stack;
    std::uint32_t next_index = 0;
    std::vector<std::vector<node_id>> sccs;

    void run() {
        for (node_id u : nodes)
            if (!index.count(u)) visit(u);
    }

    void visit(node_id root) {
        // iterative DFS: (node, next child position)
        std::vector<std::pair<node_id, std::size_t>> call_stack{{root, 0}};
        while (!call_stack.empty()) {
            auto& [u, child] = call_stack.back();
            if (child == 0) {
                index[u] = low[u] = next_index++;
                stack.push_back(u);
                on_stack[u] = true;
            }
            const auto& out = adj.at(u);
            bool descended = false;
            while (child < out.size()) {
                node_id v = out[child++];
                if (!index.count(v)) {
                    call_stack.emplace_back(v, 0);
                    descended = true;
                    break;
                }
                if (on_stack[v]) low[u] = std::min(low[u], index[v]);
            }
            if (descended) continue;
            if (low[u] == index[u]) {
                std::vector<node_id> scc;
                for (;;) {
                    node_id w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    scc.push_back(w);
                    if (w == u) break;
                }
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
            node_id done = u;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                node_id parent = call_stack.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
};

} // namespace

std::vector<time_value> zero_snapshot_times(const temporal_network& net) {
    std::vector<time_value> times;
    for (const temporal_edge& e : net.edges)
        if (e.delay == 0) times.push_back(e.dep);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

namespace {

zero_snapshot snapshot_from_edges(const temporal_network& net, time_value t,
                                  std::vector<edge_id> edges) {
    zero_snapshot snap;
    snap.time = t;
    snap.edges = std::move(edges);

    std::unordered_map<node_id, std::vector<node_id>> adj;
    std::vector<node_id> nodes;
    for (edge_id e : snap.edges) {
        const temporal_edge& ed = net.edges[e];
        for (node_id u : {ed.tail, ed.head})
            if (adj.try_emplace(u).second) nodes.push_back(u);
        adj[ed.tail].push_back(ed.head);
    }
    std::sort(nodes.begin(), nodes.end());

    tarjan t_scan{nodes, adj, {}, {}, {}, {}, 0, {}};
    t_scan.run();
    snap.scc_order.assign(t_scan.sccs.rbegin(), t_scan.sccs.rend());
    return snap;
}

} // namespace

zero_snapshot make_zero_snapshot(const temporal_network& net, time_value t) {
    std::vector<edge_id> edges;
    for (edge_id e = 0; e < net.edges.size(); ++e)
        if (net.edges[e].delay == 0 && net.edges[e].dep == t)
            edges.push_back(e);
    return snapshot_from_edges(net, t, std::move(edges));
}

std::vector<zero_snapshot> all_zero_snapshots(const temporal_network& net) {
    std::unordered_map<time_value, std::vector<edge_id>> groups;
    for (edge_id e = 0; e < net.edges.size(); ++e)
        if (net.edges[e].delay == 0)
            groups[net.edges[e].dep].push_back(e); // input order within a group

    std::vector<time_value> times;
    times.reserve(groups.size());
    for (const auto& [t, _] : groups) times.push_back(t);
    std::sort(times.begin(), times.end());

    std::vector<zero_snapshot> snaps;
    snaps.reserve(times.size());
    for (time_value t : times)
        snaps.push_back(snapshot_from_edges(net, t, std::move(groups[t])));
    return snaps;
}

namespace detail {

std::vector<std::pair<node_id, std::uint32_t>> scc_ranks(const zero_snapshot& snap) {
    std::vector<std::pair<node_id, std::uint32_t>> ranks;
    for (std::uint32_t r = 0; r < snap.scc_order.size(); ++r)
        for (node_id u : snap.scc_order[r])
            ranks.emplace_back(u, r);
    return ranks;
}

} // namespace detail

namespace {

// A cycle witness inside a snapshot known to be cyclic: walk snapshot edges
// (self-loops first) until a node repeats.
std::vector<node_id> find_cycle(const temporal_network& net, const zero_snapshot& snap) {
    std::unordered_map<node_id, std::uint32_t> rank;
    for (const auto& [node, r] : detail::scc_ranks(snap)) rank.emplace(node, r);

    for (edge_id e : snap.edges)
        if (net.edges[e].tail == net.edges[e].head)
            return {net.edges[e].tail};

    // pick the first non-singleton SCC and walk inside it
    for (std::uint32_t r = 0; r < snap.scc_order.size(); ++r) {
        if (snap.scc_order[r].size() < 2) continue;
        node_id start = snap.scc_order[r].front();
        std::vector<node_id> path{start};
        std::unordered_map<node_id, std::size_t> seen{{start, 0}};
        node_id cur = start;
        for (;;) {
            node_id next = no_node;
            for (edge_id e : snap.edges) {
                const temporal_edge& ed = net.edges[e];
                if (ed.tail == cur && rank.at(ed.head) == r) { next = ed.head; break; }
            }
            if (next == no_node) break; // cannot happen in a non-trivial SCC
            auto it = seen.find(next);
            if (it != seen.end())
                return std::vector<node_id>(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
            seen.emplace(next, path.size());
            path.push_back(next);
            cur = next;
        }
    }
    return {};
}

} // namespace

zero_acyclic_report validate_zero_acyclic(const temporal_network& net) {
    zero_acyclic_report rep;
    for (const zero_snapshot& snap : all_zero_snapshots(net)) {
        bool cyclic = false;
        for (const auto& scc : snap.scc_order)
            if (scc.size() > 1) cyclic = true;
        for (edge_id e : snap.edges)
            if (net.edges[e].tail == net.edges[e].head) cyclic = true;
        if (cyclic) {
            rep.ok = false;
            rep.cycles.push_back({snap.time, find_cycle(net, snap)});
        }
    }
    return rep;
}

} // namespace tpareto
