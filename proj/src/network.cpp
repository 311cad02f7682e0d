#include "tpareto/network.hpp"

#include "tpareto/errors.hpp"

namespace tpareto {

std::optional<node_id> temporal_network::find_node(std::string_view name) const {
    auto it = name_ids.find(std::string(name));
    if (it == name_ids.end()) return std::nullopt;
    return it->second;
}

temporal_network build_network(const std::vector<edge_record>& records) {
    temporal_network net;
    net.edges.reserve(records.size());

    auto intern = [&net](const std::string& name) -> node_id {
        auto [it, inserted] = net.name_ids.try_emplace(name, static_cast<node_id>(net.node_names.size()));
        if (inserted) net.node_names.push_back(name);
        return it->second;
    };

    bool any_cost = false;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const edge_record& rec = records[i];
        auto describe = [&rec, i]() {
            return "record " + std::to_string(i) + " (" + rec.tail + " -> " + rec.head + ")";
        };
        if (rec.delay < 0)
            throw input_error("negative delay in " + describe());
        time_value arrival = 0;
        if (__builtin_add_overflow(rec.dep, rec.delay, &arrival))
            throw input_error("tick overflow in dep + delay of " + describe());
        if (i == 0) {
            any_cost = rec.cost.has_value();
        } else if (rec.cost.has_value() != any_cost) {
            throw input_error("cost column present on some records but not on " + describe());
        }

        temporal_edge e;
        e.tail = intern(rec.tail);
        e.head = intern(rec.head);
        e.dep = rec.dep;
        e.delay = rec.delay;
        net.edges.push_back(e);
        if (rec.cost) net.raw_costs.push_back(*rec.cost);
    }
    return net;
}

} // namespace tpareto
