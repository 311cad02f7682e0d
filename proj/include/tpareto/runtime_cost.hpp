#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/network.hpp"
#include "tpareto/time.hpp"

namespace tpareto {

// Name-driven cost structure backing the CLI vocabulary: one of the six
// builtins, or a lexicographic product written "lex:<a>,<b>,...". Values are
// component vectors compared lexicographically, so arbitrary products compose
// at runtime without new solver instantiations.
enum class builtin_cost : std::uint8_t { profile, hops, delay, maxprod, minmax, maxmin };

using runtime_scalar = std::variant<std::int64_t, double>;
using runtime_value = std::vector<runtime_scalar>;

class runtime_cost {
public:
    using value_type = runtime_value;

    // Throws input_error on an unknown structure name.
    static runtime_cost parse(std::string_view name, const time_scale& scale = {});

    value_type edge_cost(const temporal_network& net, edge_id e) const;
    value_type combine(const value_type& a, const value_type& b) const;
    bool leq(const value_type& a, const value_type& b) const;
    bool needs_raw_cost() const;
    std::string name() const { return name_; }

    // Tick-domain components render through the decimal time scale.
    std::string value_text(const value_type& v) const;
    std::string component_text(std::size_t i, const runtime_scalar& s) const;

    const std::vector<builtin_cost>& components() const { return components_; }

private:
    std::vector<builtin_cost> components_;
    std::string name_;
    time_scale scale_;
};

} // namespace tpareto
