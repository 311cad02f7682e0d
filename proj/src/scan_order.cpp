#include "tpareto/scan_order.hpp"

#include <algorithm>
#include <unordered_map>

#include "tpareto/errors.hpp"
#include "tpareto/snapshot.hpp"

namespace tpareto {

scan_order build_scan_order(const temporal_network& net, time_value t0,
                            zero_delay_policy policy) {
    // Zero-delay edges tie on arrival exactly within their snapshot; their
    // relative position comes from the snapshot's SCC topological order.
    // Edges whose endpoints share an SCC sort before edges leaving that SCC,
    // so that (in the transitively-closed case) a path's single inside-SCC
    // edge is always scanned before the edge continuing out of the SCC.
    std::unordered_map<edge_id, std::uint64_t> zero_key;
    for (const zero_snapshot& snap : all_zero_snapshots(net)) {
        const time_value t = snap.time;
        if (t < t0) continue; // whole snapshot excluded by the t0 filter

        bool cyclic = false;
        for (const auto& scc : snap.scc_order)
            if (scc.size() > 1) cyclic = true;
        for (edge_id e : snap.edges)
            if (net.edges[e].tail == net.edges[e].head) cyclic = true;
        if (cyclic && policy == zero_delay_policy::require_acyclic) {
            zero_acyclic_report rep = validate_zero_acyclic(net);
            std::string msg = "cyclic zero-delay snapshot at t=" + std::to_string(t) + ": ";
            for (const zero_cycle& zc : rep.cycles) {
                if (zc.time != t) continue;
                for (std::size_t i = 0; i < zc.nodes.size(); ++i)
                    msg += net.node_names[zc.nodes[i]] + " -> ";
                msg += zc.nodes.empty() ? "?" : net.node_names[zc.nodes.front()];
                break;
            }
            throw model_error(msg);
        }

        std::unordered_map<node_id, std::uint32_t> rank;
        for (const auto& [node, r] : detail::scc_ranks(snap)) rank.emplace(node, r);
        for (edge_id e : snap.edges) {
            const temporal_edge& ed = net.edges[e];
            const std::uint32_t tr = rank.at(ed.tail);
            const bool leaves_scc = rank.at(ed.head) != tr;
            zero_key.emplace(e, (static_cast<std::uint64_t>(tr) << 1) | (leaves_scc ? 1 : 0));
        }
    }

    scan_order so;
    so.t0 = t0;
    for (edge_id e = 0; e < net.edges.size(); ++e)
        if (net.edges[e].dep >= t0) so.order.push_back(e);

    std::stable_sort(so.order.begin(), so.order.end(), [&](edge_id a, edge_id b) {
        const temporal_edge& ea = net.edges[a];
        const temporal_edge& eb = net.edges[b];
        if (ea.arrival() != eb.arrival()) return ea.arrival() < eb.arrival();
        const bool za = ea.delay == 0, zb = eb.delay == 0;
        if (za != zb) return !za; // positive delay first
        if (za && zb) return zero_key.at(a) < zero_key.at(b);
        return false; // equal-arrival positive-delay: keep input order
    });
    return so;
}

} // namespace tpareto
