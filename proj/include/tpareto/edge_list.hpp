#pragma once

#include <iosfwd>
#include <string>

#include "tpareto/network.hpp"
#include "tpareto/time.hpp"

namespace tpareto {

// Edge-list text format: one record per line, fields separated by tabs or
// runs of spaces:
//     tail head dep delay [cost]
// '#' starts a comment; dep/delay are decimal numerals with at most
// time-scale fractional digits; cost is a decimal numeral whose meaning
// depends on the selected cost structure. Errors carry the line number.
temporal_network parse_edge_list(std::istream& in, const time_scale& scale = {});

// Canonical text rendering; parse(serialize(net)) rebuilds the same network.
std::string serialize_edge_list(const temporal_network& net, const time_scale& scale = {});

} // namespace tpareto
