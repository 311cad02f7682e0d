#include "tpareto/runtime_cost.hpp"

#include <algorithm>

#include "tpareto/errors.hpp"

namespace tpareto {

namespace {

builtin_cost builtin_from_name(std::string_view name) {
    if (name == "profile") return builtin_cost::profile;
    if (name == "hops") return builtin_cost::hops;
    if (name == "delay") return builtin_cost::delay;
    if (name == "maxprod") return builtin_cost::maxprod;
    if (name == "minmax") return builtin_cost::minmax;
    if (name == "maxmin") return builtin_cost::maxmin;
    throw input_error("unknown cost structure '" + std::string(name) + "'");
}

bool uses_ticks(builtin_cost b) {
    return b == builtin_cost::profile || b == builtin_cost::delay;
}

bool uses_raw(builtin_cost b) {
    return b == builtin_cost::maxprod || b == builtin_cost::minmax || b == builtin_cost::maxmin;
}

// strictly-better under the component's order
bool scalar_better(builtin_cost b, const runtime_scalar& x, const runtime_scalar& y) {
    switch (b) {
    case builtin_cost::profile: return std::get<std::int64_t>(x) > std::get<std::int64_t>(y);
    case builtin_cost::hops:
    case builtin_cost::delay:   return std::get<std::int64_t>(x) < std::get<std::int64_t>(y);
    case builtin_cost::maxprod:
    case builtin_cost::maxmin:  return std::get<double>(x) > std::get<double>(y);
    case builtin_cost::minmax:  return std::get<double>(x) < std::get<double>(y);
    }
    return false;
}

runtime_scalar scalar_combine(builtin_cost b, const runtime_scalar& x, const runtime_scalar& y) {
    switch (b) {
    case builtin_cost::profile: return x;
    case builtin_cost::hops:
    case builtin_cost::delay:
        return std::get<std::int64_t>(x) + std::get<std::int64_t>(y);
    case builtin_cost::maxprod: return std::get<double>(x) * std::get<double>(y);
    case builtin_cost::minmax:  return std::max(std::get<double>(x), std::get<double>(y));
    case builtin_cost::maxmin:  return std::min(std::get<double>(x), std::get<double>(y));
    }
    return x;
}

} // namespace

runtime_cost runtime_cost::parse(std::string_view name, const time_scale& scale) {
    runtime_cost cs;
    cs.scale_ = scale;
    if (name.rfind("lex:", 0) == 0) {
        std::string_view rest = name.substr(4);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view part = rest.substr(0, comma);
            if (part.empty())
                throw input_error("empty component in cost structure '" + std::string(name) + "'");
            cs.components_.push_back(builtin_from_name(part));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        if (cs.components_.empty())
            throw input_error("empty lexicographic cost structure");
    } else {
        cs.components_.push_back(builtin_from_name(name));
    }
    cs.name_ = std::string(name);
    return cs;
}

runtime_value runtime_cost::edge_cost(const temporal_network& net, edge_id e) const {
    runtime_value v;
    v.reserve(components_.size());
    for (builtin_cost b : components_) {
        switch (b) {
        case builtin_cost::profile: v.emplace_back(net.edges[e].dep); break;
        case builtin_cost::hops:    v.emplace_back(std::int64_t{1}); break;
        case builtin_cost::delay:   v.emplace_back(net.edges[e].delay); break;
        default:                    v.emplace_back(net.raw_costs[e]); break;
        }
    }
    return v;
}

runtime_value runtime_cost::combine(const runtime_value& a, const runtime_value& b) const {
    runtime_value v;
    v.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        v.push_back(scalar_combine(components_[i], a[i], b[i]));
    return v;
}

bool runtime_cost::leq(const runtime_value& a, const runtime_value& b) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (a[i] == b[i]) continue;
        return scalar_better(components_[i], a[i], b[i]);
    }
    return true;
}

bool runtime_cost::needs_raw_cost() const {
    return std::any_of(components_.begin(), components_.end(), uses_raw);
}

std::string runtime_cost::component_text(std::size_t i, const runtime_scalar& s) const {
    if (std::holds_alternative<double>(s)) return detail::real_text(std::get<double>(s));
    if (uses_ticks(components_[i])) return format_time(std::get<std::int64_t>(s), scale_);
    return std::to_string(std::get<std::int64_t>(s));
}

std::string runtime_cost::value_text(const runtime_value& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += component_text(i, v[i]);
    }
    return out;
}

} // namespace tpareto
