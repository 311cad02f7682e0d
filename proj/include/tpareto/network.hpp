#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tpareto/time.hpp"

namespace tpareto {

using node_id = std::uint32_t;
using edge_id = std::uint32_t;

inline constexpr node_id no_node = static_cast<node_id>(-1);
inline constexpr edge_id no_edge = static_cast<edge_id>(-1);

// Temporal edge (u,v,tau,delta): traversable from tail at exactly time dep,
// arriving at head at dep + delay. delay >= 0.
struct temporal_edge {
    node_id tail = no_node;
    node_id head = no_node;
    time_value dep = 0;
    time_value delay = 0;

    time_value arrival() const { return dep + delay; }

    friend bool operator==(const temporal_edge&, const temporal_edge&) = default;
};

// One input record before names are interned.
struct edge_record {
    std::string tail;
    std::string head;
    time_value dep = 0;
    time_value delay = 0;
    std::optional<double> cost; // raw cost column entry, if the input carries one
};

// A point-availability time-dependent network. Treat as immutable once built:
// solvers and scan orders share it across threads without synchronization.
struct temporal_network {
    std::vector<std::string> node_names;             // dense id -> name
    std::unordered_map<std::string, node_id> name_ids;
    std::vector<temporal_edge> edges;                // input order; id = index
    std::vector<double> raw_costs;                   // aligned with edges, or empty

    std::size_t node_count() const { return node_names.size(); }
    bool has_raw_costs() const { return !raw_costs.empty(); }

    std::optional<node_id> find_node(std::string_view name) const;
};

// Interns names to dense ids in first-appearance order and stores edges in
// input order. Rejects negative delays, tick overflow in dep + delay, and a
// cost column present on some records but not all.
temporal_network build_network(const std::vector<edge_record>& records);

} // namespace tpareto
