#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/network.hpp"

namespace tpareto {

// One Pareto pair (t, c) plus the two path-extraction pointers: via_edge is
// the edge whose scan created the pair, (pred_node, pred_index) names the
// predecessor pair it extended. pred set implies via set.
template <class C>
struct pareto_pair {
    time_value arrival = 0;
    C cost{};
    edge_id via_edge = no_edge;
    node_id pred_node = no_node;
    std::uint32_t pred_index = 0;

    bool has_pred() const { return pred_node != no_node; }
};

enum class update_outcome { appended, replaced, ignored };

struct lookup_result {
    bool found = false;
    std::uint32_t index = 0;  // valid when found
    std::uint32_t probes = 0; // pair inspections performed
};

// Arrival-sorted list of Pareto pairs with strictly improving cost. Mutation
// is append-only plus replacement of the last element, which is what makes
// removals O(1): no pair other than the final one is ever touched.
template <class C>
class pareto_set {
public:
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const pareto_pair<C>& operator[](std::size_t i) const { return pairs_[i]; }
    const pareto_pair<C>& back() const { return pairs_.back(); }
    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    // update_ps: admit a candidate pair whose arrival is >= every stored
    // arrival (the scan guarantees monotone candidates). Appends when the
    // cost strictly improves on the last pair, replaces the last pair when it
    // additionally ties on arrival, and ignores the candidate otherwise.
    template <cost_structure CS>
        requires std::same_as<typename CS::value_type, C>
    update_outcome update(const CS& cs, time_value t, C c,
                          edge_id via = no_edge, node_id pred_node = no_node,
                          std::uint32_t pred_index = 0) {
        if (!pairs_.empty() && t < pairs_.back().arrival)
            throw std::logic_error("update_ps: candidate arrival below the scan frontier");
        if (pairs_.empty()) {
            pairs_.push_back({t, std::move(c), via, pred_node, pred_index});
            return update_outcome::appended;
        }
        pareto_pair<C>& last = pairs_.back();
        if (!cost_less(cs, c, last.cost)) return update_outcome::ignored;
        if (t == last.arrival) {
            last = {t, std::move(c), via, pred_node, pred_index};
            return update_outcome::replaced;
        }
        pairs_.push_back({t, std::move(c), via, pred_node, pred_index});
        return update_outcome::appended;
    }

    // Pair with the greatest arrival <= tau. Gallops back from the end in
    // doubling strides, then binary-searches the bracketed window, so the
    // cost is logarithmic in the number of trailing pairs with arrival > tau
    // rather than in the set size.
    lookup_result latest_at_or_before(time_value tau) const {
        lookup_result res;
        const std::size_t p = pairs_.size();
        if (p == 0) return res;

        auto at_or_before = [&](std::size_t i) {
            ++res.probes;
            return pairs_[i].arrival <= tau;
        };

        if (at_or_before(p - 1)) {
            res.found = true;
            res.index = static_cast<std::uint32_t>(p - 1);
            return res;
        }
        if (p == 1) return res;

        std::size_t prev_fail = p - 1;
        for (std::size_t off = 1;; off <<= 1) {
            const std::size_t pos = off >= p - 1 ? 0 : p - 1 - off;
            if (at_or_before(pos)) {
                // answer in [pos, prev_fail - 1]; pairs_[prev_fail] > tau
                std::size_t lo = pos, hi = prev_fail - 1;
                while (lo < hi) {
                    const std::size_t mid = lo + (hi - lo + 1) / 2;
                    if (at_or_before(mid))
                        lo = mid;
                    else
                        hi = mid - 1;
                }
                res.found = true;
                res.index = static_cast<std::uint32_t>(lo);
                return res;
            }
            if (pos == 0) return res; // every arrival exceeds tau
            prev_fail = pos;
        }
    }

private:
    std::vector<pareto_pair<C>> pairs_;
};

} // namespace tpareto
