#pragma once

#include <vector>

#include "tpareto/network.hpp"

namespace tpareto {

enum class zero_delay_policy {
    require_acyclic,            // reject any cyclic zero snapshot
    assume_transitively_closed, // caller asserts closure; SCC order is used
};

// Permutation of edge indices realizing the scan order: edges with dep < t0
// excluded; arrival times non-decreasing; at equal arrival, positive-delay
// edges before zero-delay ones; equal-arrival zero-delay edges follow the SCC
// topological order of their snapshot (within one SCC rank, edges that stay
// inside the SCC precede edges leaving it); remaining ties keep input order.
struct scan_order {
    std::vector<edge_id> order;
    time_value t0 = 0;
};

// Throws model_error (naming the time and a cycle) when a zero snapshot is
// cyclic and the policy does not assert transitive closure.
scan_order build_scan_order(const temporal_network& net, time_value t0,
                            zero_delay_policy policy = zero_delay_policy::require_acyclic);

} // namespace tpareto
