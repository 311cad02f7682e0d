#include "tpareto/cli.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpareto/apps.hpp"
#include "tpareto/edge_list.hpp"
#include "tpareto/errors.hpp"
#include "tpareto/oracle.hpp"
#include "tpareto/runtime_cost.hpp"
#include "tpareto/snapshot.hpp"
#include "tpareto/solver.hpp"

namespace tpareto {

namespace {

using ordered_json = nlohmann::ordered_json;

struct cli_options {
    std::string input_file;
    std::string source_name;
    std::string dest_name;
    std::string t0_text;
    std::string deadline_text;
    std::string cost_name = "hops";
    std::string format = "tsv";
    int time_scale_digits = 3;
    bool paths = false;
    bool assume_closed = false;
    bool use_oracle = false;
    bool dump = false;
    std::uint64_t seed = 0;
    bool seeded = false;
};

time_scale scale_of(const cli_options& opt) {
    return time_scale{opt.time_scale_digits};
}

zero_delay_policy zero_policy_of(const cli_options& opt) {
    return opt.assume_closed ? zero_delay_policy::assume_transitively_closed
                             : zero_delay_policy::require_acyclic;
}

temporal_network load_network(const cli_options& opt, std::istream& fallback) {
    const time_scale scale = scale_of(opt);
    if (opt.seeded) {
        oracle::random_network_spec spec;
        spec.node_count = 6;
        spec.edge_count = 15;
        spec.seed = opt.seed;
        temporal_network net = oracle::generate_network(spec);
        for (temporal_edge& e : net.edges) { // generated times are in whole units
            e.dep *= scale.ticks_per_unit();
            e.delay *= scale.ticks_per_unit();
        }
        return net;
    }
    if (!opt.input_file.empty()) {
        std::ifstream file(opt.input_file);
        if (!file) throw input_error("cannot open input file '" + opt.input_file + "'");
        return parse_edge_list(file, scale);
    }
    return parse_edge_list(fallback, scale);
}

node_id resolve_node(const temporal_network& net, const std::string& name,
                     const char* what) {
    if (name.empty()) throw input_error(std::string("missing ") + what + " node name");
    if (auto id = net.find_node(name)) return *id;
    throw input_error(std::string("unknown ") + what + " node '" + name + "'");
}

time_value default_t0(const temporal_network& net) {
    time_value t0 = 0;
    bool first = true;
    for (const temporal_edge& e : net.edges) {
        if (first || e.dep < t0) t0 = e.dep;
        first = false;
    }
    return t0;
}

time_value resolve_t0(const cli_options& opt, const temporal_network& net) {
    if (opt.t0_text.empty()) return default_t0(net);
    return parse_time(opt.t0_text, scale_of(opt));
}

// JSON time rendering: integral values at the scale stay integers.
ordered_json json_time(time_value ticks, const time_scale& scale) {
    const std::int64_t unit = scale.ticks_per_unit();
    if (ticks % unit == 0) return ticks / unit;
    return static_cast<double>(ticks) / static_cast<double>(unit);
}

ordered_json json_cost(const runtime_cost& cs, const runtime_value& v,
                       const time_scale& scale) {
    auto component = [&](std::size_t i) -> ordered_json {
        if (std::holds_alternative<double>(v[i])) return std::get<double>(v[i]);
        const std::int64_t raw = std::get<std::int64_t>(v[i]);
        const builtin_cost kind = cs.components()[i];
        if (kind == builtin_cost::profile || kind == builtin_cost::delay)
            return json_time(raw, scale);
        return raw;
    };
    if (v.size() == 1) return component(0);
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(component(i));
    return arr;
}

ordered_json json_stats(const solve_stats& st) {
    return ordered_json{{"P", st.max_pairs_per_node},
                        {"K", st.max_edge_complexity},
                        {"total_pairs", st.total_pairs},
                        {"total_probes", st.total_probes}};
}

std::string join_edge_ids(const std::vector<edge_id>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(edges[i]);
    }
    return out;
}

void require_positive_raw_costs(const temporal_network& net, bool unit_interval) {
    for (edge_id e = 0; e < net.raw_costs.size(); ++e) {
        const double c = net.raw_costs[e];
        if (c <= 0.0)
            throw input_error("edge " + std::to_string(e) +
                              ": cost must be positive for product composition");
        if (unit_interval && c > 1.0)
            throw input_error("edge " + std::to_string(e) +
                              ": reliability must lie in (0,1]");
    }
}

// ---- subcommand runners ------------------------------------------------

int run_solve(const cli_options& opt, const temporal_network& net, std::ostream& out) {
    const time_scale scale = scale_of(opt);
    const runtime_cost cs = runtime_cost::parse(opt.cost_name, scale);
    for (builtin_cost b : cs.components())
        if (b == builtin_cost::maxprod) require_positive_raw_costs(net, false);
    const node_id source = resolve_node(net, opt.source_name, "source");
    const time_value t0 = resolve_t0(opt, net);

    query q;
    q.source = source;
    q.t0 = t0;
    q.track_paths = opt.paths;
    q.zero_policy = zero_policy_of(opt);

    solve_result<runtime_value> res;
    if (opt.use_oracle) {
        if (opt.paths) throw input_error("--paths is not available with --oracle");
        build_scan_order(net, t0, q.zero_policy); // same model checks as the solver
        const auto sets = oracle::enumerate_pareto(net, cs, source, t0);
        res.sets.resize(net.node_count());
        for (node_id u = 0; u < net.node_count(); ++u)
            for (const auto& [t, c] : sets[u])
                res.sets[u].update(cs, t, c);
        for (const auto& ps : res.sets) {
            res.stats.total_pairs += ps.size();
            res.stats.max_pairs_per_node = std::max(res.stats.max_pairs_per_node, ps.size());
        }
    } else {
        res = solve(net, cs, q);
    }

    auto path_of = [&](node_id u, std::size_t i) {
        return extract_path(net, res, u, i).edges;
    };

    if (opt.format == "json") {
        ordered_json doc;
        doc["query"] = {{"command", "solve"},
                        {"source", net.node_names[source]},
                        {"t0", json_time(t0, scale)},
                        {"cost", cs.name()},
                        {"paths", opt.paths}};
        ordered_json nodes = ordered_json::object();
        for (node_id u = 0; u < net.node_count(); ++u) {
            ordered_json entries = ordered_json::array();
            for (std::size_t i = 0; i < res.sets[u].size(); ++i) {
                const auto& pair = res.sets[u][i];
                ordered_json entry{{"arrival", json_time(pair.arrival, scale)},
                                   {"cost", json_cost(cs, pair.cost, scale)}};
                if (opt.paths) entry["path"] = path_of(u, i);
                entries.push_back(std::move(entry));
            }
            nodes[net.node_names[u]] = std::move(entries);
        }
        doc["nodes"] = std::move(nodes);
        doc["stats"] = json_stats(res.stats);
        out << doc.dump(2) << '\n';
        return 0;
    }

    for (node_id u = 0; u < net.node_count(); ++u)
        for (std::size_t i = 0; i < res.sets[u].size(); ++i) {
            const auto& pair = res.sets[u][i];
            out << net.node_names[u] << '\t' << format_time(pair.arrival, scale)
                << '\t' << cs.value_text(pair.cost);
            if (opt.paths) out << '\t' << join_edge_ids(path_of(u, i));
            out << '\n';
        }
    return 0;
}

int run_reverse(const cli_options& opt, const temporal_network& net, std::ostream& out) {
    const time_scale scale = scale_of(opt);
    const runtime_cost cs = runtime_cost::parse(opt.cost_name, scale);
    for (builtin_cost b : cs.components())
        if (b == builtin_cost::maxprod) require_positive_raw_costs(net, false);
    const node_id dest = resolve_node(net, opt.dest_name, "destination");
    std::optional<time_value> deadline;
    if (!opt.deadline_text.empty()) deadline = parse_time(opt.deadline_text, scale);
    const zero_delay_policy policy = zero_policy_of(opt);

    reverse_result<runtime_value> res;
    if (opt.use_oracle) {
        if (opt.paths) throw input_error("--paths is not available with --oracle");
        // reverse-adapted enumeration: per source node, (departure, cost) of
        // every path into dest, filtered by the latest-departure domination
        res.sets.resize(net.node_count());
        for (node_id u = 0; u < net.node_count(); ++u) {
            std::vector<std::pair<time_value, runtime_value>> found;
            std::vector<runtime_value> fold;
            oracle::for_each_path(net, u, std::numeric_limits<time_value>::min(),
                                  [&](const std::vector<edge_id>& path) {
                const edge_id last = path.back();
                fold.resize(path.size() - 1);
                runtime_value cost = path.size() == 1
                    ? cs.edge_cost(net, last)
                    : cs.combine(fold.back(), cs.edge_cost(net, last));
                fold.push_back(cost);
                if (net.edges[path.back()].head != dest) return;
                if (deadline && net.edges[last].arrival() > *deadline) return;
                found.emplace_back(-net.edges[path.front()].dep, std::move(cost));
            });
            auto front = oracle::pareto_filter(cs, std::move(found));
            for (auto it = front.rbegin(); it != front.rend(); ++it)
                res.sets[u].push_back({-it->first, it->second, no_edge, no_node, 0});
        }
    } else {
        res = solve_reverse(net, cs, dest, deadline, opt.paths, policy);
    }

    auto path_of = [&](node_id u, std::size_t i) {
        return extract_reverse_path(net, res, u, i).edges;
    };

    if (opt.format == "json") {
        ordered_json doc;
        doc["query"] = {{"command", "reverse"},
                        {"dest", net.node_names[dest]},
                        {"cost", cs.name()},
                        {"paths", opt.paths}};
        if (deadline) doc["query"]["deadline"] = json_time(*deadline, scale);
        ordered_json nodes = ordered_json::object();
        for (node_id u = 0; u < net.node_count(); ++u) {
            ordered_json entries = ordered_json::array();
            for (std::size_t i = 0; i < res.sets[u].size(); ++i) {
                const auto& pair = res.sets[u][i];
                ordered_json entry{{"departure", json_time(pair.arrival, scale)},
                                   {"cost", json_cost(cs, pair.cost, scale)}};
                if (opt.paths) entry["path"] = path_of(u, i);
                entries.push_back(std::move(entry));
            }
            nodes[net.node_names[u]] = std::move(entries);
        }
        doc["nodes"] = std::move(nodes);
        doc["stats"] = json_stats(res.stats);
        out << doc.dump(2) << '\n';
        return 0;
    }

    for (node_id u = 0; u < net.node_count(); ++u)
        for (std::size_t i = 0; i < res.sets[u].size(); ++i) {
            const auto& pair = res.sets[u][i];
            out << net.node_names[u] << '\t' << format_time(pair.arrival, scale)
                << '\t' << cs.value_text(pair.cost);
            if (opt.paths) out << '\t' << join_edge_ids(path_of(u, i));
            out << '\n';
        }
    return 0;
}

// scalar-per-node applications (hops, delay, reliability, minmax)
template <class V, class Text, class Json>
int run_scalar_app(const cli_options& opt, const temporal_network& net,
                   std::ostream& out, const char* command,
                   const per_node<std::optional<V>>& answers,
                   const solve_stats& stats, Text&& text, Json&& to_json) {
    const time_scale scale = scale_of(opt);
    if (opt.format == "json") {
        ordered_json doc;
        doc["query"] = {{"command", command},
                        {"source", opt.source_name},
                        {"t0", opt.t0_text.empty()
                                   ? json_time(default_t0(net), scale)
                                   : json_time(parse_time(opt.t0_text, scale), scale)}};
        ordered_json nodes = ordered_json::object();
        for (node_id u = 0; u < net.node_count(); ++u)
            nodes[net.node_names[u]] = answers[u] ? to_json(*answers[u]) : ordered_json(nullptr);
        doc["nodes"] = std::move(nodes);
        doc["stats"] = json_stats(stats);
        out << doc.dump(2) << '\n';
        return 0;
    }
    for (node_id u = 0; u < net.node_count(); ++u) {
        out << net.node_names[u] << '\t';
        if (answers[u])
            out << text(*answers[u]);
        else
            out << "unreachable";
        out << '\n';
    }
    return 0;
}

int run_profile(const cli_options& opt, const temporal_network& net, std::ostream& out) {
    const time_scale scale = scale_of(opt);
    const node_id source = resolve_node(net, opt.source_name, "source");
    const time_value t0 = resolve_t0(opt, net);
    solve_stats stats;
    const auto profiles = profile(net, source, t0, &stats, zero_policy_of(opt));

    if (opt.format == "json") {
        ordered_json doc;
        doc["query"] = {{"command", "profile"},
                        {"source", net.node_names[source]},
                        {"t0", json_time(t0, scale)}};
        ordered_json nodes = ordered_json::object();
        for (node_id u = 0; u < net.node_count(); ++u) {
            ordered_json steps = ordered_json::array();
            for (const profile_step& s : profiles[u].steps)
                steps.push_back({{"departure", json_time(s.departure, scale)},
                                 {"arrival", json_time(s.arrival, scale)}});
            nodes[net.node_names[u]] = std::move(steps);
        }
        doc["nodes"] = std::move(nodes);
        doc["stats"] = json_stats(stats);
        out << doc.dump(2) << '\n';
        return 0;
    }

    for (node_id u = 0; u < net.node_count(); ++u)
        for (const profile_step& s : profiles[u].steps)
            out << net.node_names[u] << '\t' << format_time(s.departure, scale)
                << '\t' << format_time(s.arrival, scale) << '\n';
    return 0;
}

int run_fastest(const cli_options& opt, const temporal_network& net, std::ostream& out) {
    const time_scale scale = scale_of(opt);
    const node_id source = resolve_node(net, opt.source_name, "source");
    const time_value t0 = resolve_t0(opt, net);
    solve_stats stats;
    const auto answers = shortest_fastest(net, source, t0, &stats, zero_policy_of(opt));
    return run_scalar_app<fastest_answer>(
        opt, net, out, "fastest", answers, stats,
        [&](const fastest_answer& a) {
            return format_time(a.duration, scale) + "\t" + std::to_string(a.hops);
        },
        [&](const fastest_answer& a) {
            return ordered_json{{"duration", json_time(a.duration, scale)},
                                {"hops", a.hops}};
        });
}

int run_validate(const cli_options& opt, const temporal_network& net, std::ostream& out) {
    const time_scale scale = scale_of(opt);
    const zero_acyclic_report rep = validate_zero_acyclic(net);

    if (opt.format == "json") {
        ordered_json doc;
        doc["ok"] = rep.ok;
        ordered_json violations = ordered_json::array();
        for (const zero_cycle& zc : rep.cycles) {
            ordered_json names = ordered_json::array();
            for (node_id u : zc.nodes) names.push_back(net.node_names[u]);
            violations.push_back({{"time", json_time(zc.time, scale)},
                                  {"cycle", std::move(names)}});
        }
        doc["violations"] = std::move(violations);
        out << doc.dump(2) << '\n';
        return rep.ok ? 0 : 2;
    }

    if (rep.ok) {
        out << "ok\n";
        return 0;
    }
    for (const zero_cycle& zc : rep.cycles) {
        out << "cycle at t=" << format_time(zc.time, scale) << ':';
        for (node_id u : zc.nodes) out << ' ' << net.node_names[u] << " ->";
        if (!zc.nodes.empty()) out << ' ' << net.node_names[zc.nodes.front()];
        out << '\n';
    }
    return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& input,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"Pareto-optimal temporal paths in point-availability "
                 "time-dependent networks"};
    app.require_subcommand(1);

    cli_options opt;
    std::string command;

    auto add_common = [&](CLI::App* cmd, bool with_source) {
        cmd->add_option("--input", opt.input_file, "edge-list file (default: stdin)");
        cmd->add_option("--time-scale", opt.time_scale_digits,
                        "decimal fraction digits of time values")
            ->check(CLI::Range(0, 9));
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}));
        if (with_source) {
            cmd->add_option("--source", opt.source_name, "source node name");
            cmd->add_option("--t0", opt.t0_text,
                            "starting time (default: minimum departure in the input)");
        }
        cmd->add_option("--seed", opt.seed, "solve a generated random network")
            ->group("")
            ->each([&](const std::string&) { opt.seeded = true; });
        cmd->add_flag("--dump", opt.dump, "print the parsed network and exit")->group("");
        cmd->add_flag("--assume-closed", opt.assume_closed,
                      "assert that zero-delay snapshots are cost transitively closed");
        cmd->callback([&, cmd] { command = cmd->get_name(); });
        return cmd;
    };

    CLI::App* c;
    c = add_common(app.add_subcommand("solve",
            "all Pareto-optimal (arrival, cost) pairs per node"), true);
    c->add_option("--cost", opt.cost_name,
                  "cost structure: profile|hops|delay|maxprod|minmax|maxmin|lex:<a>,<b>,...");
    c->add_flag("--paths", opt.paths, "attach one optimal path per pair");
    c->add_flag("--oracle", opt.use_oracle, "answer by brute-force enumeration")->group("");

    add_common(app.add_subcommand("profile",
            "earliest arrival as a step function of the departure time"), true);
    add_common(app.add_subcommand("hops", "fewest edges to each node"), true);
    add_common(app.add_subcommand("delay", "minimum total delay to each node"), true);
    add_common(app.add_subcommand("fastest",
            "fewest hops among minimum-duration paths"), true);
    add_common(app.add_subcommand("reliability",
            "highest product of edge reliabilities"), true);
    add_common(app.add_subcommand("minmax",
            "minimum over paths of the maximum edge cost"), true);

    c = add_common(app.add_subcommand("reverse",
            "all-to-one latest-departure Pareto sets"), false);
    c->add_option("--dest", opt.dest_name, "destination node name");
    c->add_option("--deadline", opt.deadline_text, "drop paths arriving after this time");
    c->add_option("--cost", opt.cost_name, "cost structure (default hops)");
    c->add_flag("--paths", opt.paths, "attach one optimal path per pair");
    c->add_flag("--oracle", opt.use_oracle, "answer by brute-force enumeration")->group("");

    add_common(app.add_subcommand("validate",
            "check that every zero-delay snapshot is acyclic"), false);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tpareto");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const temporal_network net = load_network(opt, input);
        if (opt.dump) {
            out << serialize_edge_list(net, scale_of(opt));
            return 0;
        }
        if (command == "solve") return run_solve(opt, net, out);
        if (command == "reverse") return run_reverse(opt, net, out);
        if (command == "profile") return run_profile(opt, net, out);
        if (command == "fastest") return run_fastest(opt, net, out);
        if (command == "validate") return run_validate(opt, net, out);

        const time_scale scale = scale_of(opt);
        const node_id source = resolve_node(net, opt.source_name, "source");
        const time_value t0 = resolve_t0(opt, net);
        solve_stats stats;
        if (command == "hops") {
            const auto answers = fewest_hops(net, source, t0, &stats, zero_policy_of(opt));
            return run_scalar_app<std::int64_t>(
                opt, net, out, "hops", answers, stats,
                [](std::int64_t v) { return std::to_string(v); },
                [](std::int64_t v) { return ordered_json(v); });
        }
        if (command == "delay") {
            const auto answers = shortest_delay(net, source, t0, &stats, zero_policy_of(opt));
            return run_scalar_app<time_value>(
                opt, net, out, "delay", answers, stats,
                [&](time_value v) { return format_time(v, scale); },
                [&](time_value v) { return json_time(v, scale); });
        }
        if (command == "reliability") {
            require_positive_raw_costs(net, true);
            const auto answers = max_reliability(net, source, t0, &stats, zero_policy_of(opt));
            return run_scalar_app<double>(
                opt, net, out, "reliability", answers, stats,
                [](double v) { return detail::real_text(v); },
                [](double v) { return ordered_json(v); });
        }
        if (command == "minmax") {
            const auto answers = min_max(net, source, t0, &stats, zero_policy_of(opt));
            return run_scalar_app<double>(
                opt, net, out, "minmax", answers, stats,
                [](double v) { return detail::real_text(v); },
                [](double v) { return ordered_json(v); });
        }
        err << "unknown command '" << command << "'\n";
        return 1;
    } catch (const model_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace tpareto
