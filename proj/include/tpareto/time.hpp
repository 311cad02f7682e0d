#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tpareto/errors.hpp"

namespace tpareto {

// Times are integer ticks. External decimal timestamps map to ticks through a
// fixed power-of-ten scale; all internal comparisons are exact.
using time_value = std::int64_t;

struct time_scale {
    int fraction_digits = 3; // 10^3 ticks per external time unit by default

    std::int64_t ticks_per_unit() const;
};

// Parses a (possibly signed) decimal numeral with at most scale.fraction_digits
// fractional digits into ticks. Throws input_error on malformed text, excess
// fractional digits, or tick overflow.
time_value parse_time(std::string_view text, const time_scale& scale);

// Renders ticks back as a decimal numeral, trimming trailing fractional zeros.
std::string format_time(time_value ticks, const time_scale& scale);

} // namespace tpareto
