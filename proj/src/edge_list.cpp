#include "tpareto/edge_list.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <vector>

#include "tpareto/cost.hpp"
#include "tpareto/errors.hpp"

namespace tpareto {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

double parse_cost_field(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + token.size() || !std::isfinite(value))
        throw input_error("line " + std::to_string(line_no) + ": bad cost value '" + token + "'");
    return value;
}

} // namespace

temporal_network parse_edge_list(std::istream& in, const time_scale& scale) {
    std::vector<edge_record> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 4 && tokens.size() != 5)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'tail head dep delay [cost]', got " +
                              std::to_string(tokens.size()) + " fields");

        edge_record rec;
        rec.tail = tokens[0];
        rec.head = tokens[1];
        try {
            rec.dep = parse_time(tokens[2], scale);
            rec.delay = parse_time(tokens[3], scale);
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (rec.delay < 0)
            throw input_error("line " + std::to_string(line_no) + ": negative delay");
        if (tokens.size() == 5) rec.cost = parse_cost_field(tokens[4], line_no);
        if (!records.empty() && records.front().cost.has_value() != rec.cost.has_value())
            throw input_error("line " + std::to_string(line_no) +
                              ": cost column must be present on every record or on none");
        records.push_back(std::move(rec));
    }
    return build_network(records);
}

std::string serialize_edge_list(const temporal_network& net, const time_scale& scale) {
    std::string out;
    for (edge_id e = 0; e < net.edges.size(); ++e) {
        const temporal_edge& ed = net.edges[e];
        out += net.node_names[ed.tail];
        out.push_back('\t');
        out += net.node_names[ed.head];
        out.push_back('\t');
        out += format_time(ed.dep, scale);
        out.push_back('\t');
        out += format_time(ed.delay, scale);
        if (net.has_raw_costs()) {
            out.push_back('\t');
            out += detail::real_text(net.raw_costs[e]);
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace tpareto
