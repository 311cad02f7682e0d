#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tpareto/network.hpp"
#include "tpareto/pareto_set.hpp"
#include "tpareto/solver.hpp"

namespace tpareto::test {

// The five-node example network; each edge is (tail, head, dep, delay).
inline std::vector<edge_record> example_records() {
    auto rec = [](const char* a, const char* b, time_value dep, time_value delay) {
        return edge_record{a, b, dep, delay, std::nullopt};
    };
    return {
        rec("u1", "u2", 9, 4),  rec("u1", "u4", 1, 2),  rec("u1", "u4", 6, 2),
        rec("u1", "u5", 7, 3),  rec("u2", "u3", 2, 1),  rec("u2", "u4", 5, 2),
        rec("u2", "u5", 11, 1), rec("u3", "u4", 9, 2),  rec("u3", "u5", 3, 1),
        rec("u3", "u5", 12, 1), rec("u4", "u5", 3, 1),  rec("u4", "u5", 8, 1),
    };
}

inline temporal_network example_network() { return build_network(example_records()); }

inline const char* example_edge_list_text() {
    return "u1 u2 9 4\n"
           "u1 u4 1 2\n"
           "u1 u4 6 2\n"
           "u1 u5 7 3\n"
           "u2 u3 2 1\n"
           "u2 u4 5 2\n"
           "u2 u5 11 1\n"
           "u3 u4 9 2\n"
           "u3 u5 3 1\n"
           "u3 u5 12 1\n"
           "u4 u5 3 1\n"
           "u4 u5 8 1\n";
}

template <class C>
std::vector<std::pair<time_value, C>> as_pairs(const pareto_set<C>& ps) {
    std::vector<std::pair<time_value, C>> out;
    for (const auto& p : ps) out.emplace_back(p.arrival, p.cost);
    return out;
}

template <class C>
std::vector<std::pair<time_value, C>> as_pairs(const std::vector<pareto_pair<C>>& ps) {
    std::vector<std::pair<time_value, C>> out;
    for (const auto& p : ps) out.emplace_back(p.arrival, p.cost);
    return out;
}

} // namespace tpareto::test
