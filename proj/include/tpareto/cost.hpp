#pragma once

#include <charconv>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>

#include "tpareto/network.hpp"

namespace tpareto {

// A cost structure is the algebra (C, gamma, combine, leq):
//   - value_type: the cost domain, with canonical value equality,
//   - edge_cost:  gamma, reading the edge and (optionally) the raw cost column,
//   - combine:    the path combination operator (new cost = combine(prefix, edge)),
//   - leq:        a total order; strictly-better is leq(a,b) && a != b.
// The solver is only correct when leq is total/antisymmetric/transitive and
// combine is isotone w.r.t. leq; check_cost_laws samples those laws.
template <class CS>
concept cost_structure =
    std::copy_constructible<typename CS::value_type> &&
    std::equality_comparable<typename CS::value_type> &&
    requires(const CS& cs, const temporal_network& net, edge_id e,
             const typename CS::value_type& a, const typename CS::value_type& b) {
        { cs.edge_cost(net, e) } -> std::same_as<typename CS::value_type>;
        { cs.combine(a, b) } -> std::same_as<typename CS::value_type>;
        { cs.leq(a, b) } -> std::same_as<bool>;
        { cs.needs_raw_cost() } -> std::same_as<bool>;
        { cs.name() } -> std::convertible_to<std::string>;
        { cs.value_text(a) } -> std::convertible_to<std::string>;
    };

// Strict order induced by leq and canonical equality.
template <cost_structure CS>
bool cost_less(const CS& cs, const typename CS::value_type& a,
               const typename CS::value_type& b) {
    return !(a == b) && cs.leq(a, b);
}

namespace detail {

inline std::string real_text(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

inline double raw_of(const temporal_network& net, edge_id e) {
    return net.raw_costs[e];
}

} // namespace detail

// Profile: cost of a path is its departure time, later departures preferred.
struct profile_cost {
    using value_type = time_value;
    value_type edge_cost(const temporal_network& net, edge_id e) const { return net.edges[e].dep; }
    value_type combine(value_type a, value_type) const { return a; }
    bool leq(value_type a, value_type b) const { return a >= b; }
    bool needs_raw_cost() const { return false; }
    std::string name() const { return "profile"; }
    std::string value_text(value_type v) const { return std::to_string(v); }
};

// Fewest hops: every edge costs 1, sums along the path.
struct hops_cost {
    using value_type = std::int64_t;
    value_type edge_cost(const temporal_network&, edge_id) const { return 1; }
    value_type combine(value_type a, value_type b) const { return a + b; }
    bool leq(value_type a, value_type b) const { return a <= b; }
    bool needs_raw_cost() const { return false; }
    std::string name() const { return "hops"; }
    std::string value_text(value_type v) const { return std::to_string(v); }
};

// Shortest delay: sum of edge delays.
struct delay_cost {
    using value_type = time_value;
    value_type edge_cost(const temporal_network& net, edge_id e) const { return net.edges[e].delay; }
    value_type combine(value_type a, value_type b) const { return a + b; }
    bool leq(value_type a, value_type b) const { return a <= b; }
    bool needs_raw_cost() const { return false; }
    std::string name() const { return "delay"; }
    std::string value_text(value_type v) const { return std::to_string(v); }
};

// MaxProd+: product of raw costs, larger products preferred. Raw costs must be
// positive for isotonicity to hold.
struct maxprod_cost {
    using value_type = double;
    value_type edge_cost(const temporal_network& net, edge_id e) const { return detail::raw_of(net, e); }
    value_type combine(value_type a, value_type b) const { return a * b; }
    bool leq(value_type a, value_type b) const { return a >= b; }
    bool needs_raw_cost() const { return true; }
    std::string name() const { return "maxprod"; }
    std::string value_text(value_type v) const { return detail::real_text(v); }
};

// MinMax: maximum raw cost along the path, smaller maxima preferred.
struct minmax_cost {
    using value_type = double;
    value_type edge_cost(const temporal_network& net, edge_id e) const { return detail::raw_of(net, e); }
    value_type combine(value_type a, value_type b) const { return a > b ? a : b; }
    bool leq(value_type a, value_type b) const { return a <= b; }
    bool needs_raw_cost() const { return true; }
    std::string name() const { return "minmax"; }
    std::string value_text(value_type v) const { return detail::real_text(v); }
};

// MaxMin: minimum raw cost along the path (bottleneck), larger minima preferred.
struct maxmin_cost {
    using value_type = double;
    value_type edge_cost(const temporal_network& net, edge_id e) const { return detail::raw_of(net, e); }
    value_type combine(value_type a, value_type b) const { return a < b ? a : b; }
    bool leq(value_type a, value_type b) const { return a >= b; }
    bool needs_raw_cost() const { return true; }
    std::string name() const { return "maxmin"; }
    std::string value_text(value_type v) const { return detail::real_text(v); }
};

// Lexicographic product of cost structures: gamma and combine act
// componentwise, leq compares the first differing component. Isotone whenever
// every part is.
template <cost_structure... Parts>
struct lex_cost {
    static_assert(sizeof...(Parts) > 0, "lexicographic product needs at least one part");
    using value_type = std::tuple<typename Parts::value_type...>;

    std::tuple<Parts...> parts;

    lex_cost() = default;
    explicit lex_cost(Parts... p) : parts(std::move(p)...) {}

    value_type edge_cost(const temporal_network& net, edge_id e) const {
        return std::apply([&](const Parts&... p) { return value_type(p.edge_cost(net, e)...); }, parts);
    }

    value_type combine(const value_type& a, const value_type& b) const {
        return combine_impl(a, b, std::index_sequence_for<Parts...>{});
    }

    bool leq(const value_type& a, const value_type& b) const {
        return leq_impl<0>(a, b);
    }

    bool needs_raw_cost() const {
        return std::apply([](const Parts&... p) { return (p.needs_raw_cost() || ...); }, parts);
    }

    std::string name() const {
        std::string out = "lex:";
        bool first = true;
        std::apply([&](const Parts&... p) {
            ((out += (first ? "" : ","), out += p.name(), first = false), ...);
        }, parts);
        return out;
    }

    std::string value_text(const value_type& v) const {
        std::string out;
        text_impl(v, out, std::index_sequence_for<Parts...>{});
        return out;
    }

private:
    template <std::size_t... I>
    value_type combine_impl(const value_type& a, const value_type& b, std::index_sequence<I...>) const {
        return value_type(std::get<I>(parts).combine(std::get<I>(a), std::get<I>(b))...);
    }

    template <std::size_t I>
    bool leq_impl(const value_type& a, const value_type& b) const {
        if constexpr (I == sizeof...(Parts)) {
            return true; // all components equal
        } else {
            const auto& x = std::get<I>(a);
            const auto& y = std::get<I>(b);
            if (x == y) return leq_impl<I + 1>(a, b);
            return std::get<I>(parts).leq(x, y);
        }
    }

    template <std::size_t... I>
    void text_impl(const value_type& v, std::string& out, std::index_sequence<I...>) const {
        ((out += (I == 0 ? "" : ","), out += std::get<I>(parts).value_text(std::get<I>(v))), ...);
    }
};

// Sampled law checks. check_cost_laws covers what the forward solver needs:
// totality, antisymmetry, transitivity, isotonicity. The symmetric variant
// (c1 <= c2 implies c (+) c1 <= c (+) c2) is what the all-to-one adaptation
// needs instead, and genuinely differs: lex products with a left-projecting
// first component (profile) are isotone but not symmetrically so.
struct law_report {
    bool ok = true;
    std::string violated_law;
    std::string counterexample;
    long samples_checked = 0;
};

namespace detail {

template <cost_structure CS>
law_report law_failure(const CS& cs, const char* law,
                       const typename CS::value_type& a,
                       const typename CS::value_type& b,
                       const typename CS::value_type& c, long checked) {
    law_report rep;
    rep.ok = false;
    rep.violated_law = law;
    rep.counterexample = "a=" + cs.value_text(a) + " b=" + cs.value_text(b) +
                         " c=" + cs.value_text(c);
    rep.samples_checked = checked;
    return rep;
}

} // namespace detail

template <cost_structure CS, class Sampler>
law_report check_cost_laws(const CS& cs, Sampler&& sample, long n_samples,
                           std::uint64_t seed = 0x5eed) {
    using V = typename CS::value_type;
    std::mt19937_64 rng(seed);
    law_report rep;

    for (long i = 0; i < n_samples; ++i) {
        ++rep.samples_checked;
        const V a = sample(rng);
        const V b = sample(rng);
        const V c = sample(rng);

        const bool ab = cs.leq(a, b), ba = cs.leq(b, a);
        if (!ab && !ba) return detail::law_failure(cs, "totality", a, b, c, i + 1);
        if (ab && ba && !(a == b)) return detail::law_failure(cs, "antisymmetry", a, b, c, i + 1);
        if (ab && cs.leq(b, c) && !cs.leq(a, c))
            return detail::law_failure(cs, "transitivity", a, b, c, i + 1);
        // leq must agree with canonical equality on equal values
        if (a == b && (!ab || !ba)) return detail::law_failure(cs, "reflexivity", a, b, c, i + 1);

        const V& lo = ab ? a : b;
        const V& hi = ab ? b : a;
        if (!cs.leq(cs.combine(lo, c), cs.combine(hi, c)))
            return detail::law_failure(cs, "isotonicity", a, b, c, i + 1);
    }
    return rep;
}

template <cost_structure CS, class Sampler>
law_report check_symmetric_isotonicity(const CS& cs, Sampler&& sample, long n_samples,
                                       std::uint64_t seed = 0x5eed) {
    using V = typename CS::value_type;
    std::mt19937_64 rng(seed);
    law_report rep;
    for (long i = 0; i < n_samples; ++i) {
        ++rep.samples_checked;
        const V a = sample(rng);
        const V b = sample(rng);
        const V c = sample(rng);
        if (!cs.leq(a, b)) continue;
        if (!cs.leq(cs.combine(c, a), cs.combine(c, b)))
            return detail::law_failure(cs, "symmetric isotonicity", a, b, c, i + 1);
    }
    return rep;
}

} // namespace tpareto
