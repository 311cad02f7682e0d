#include "tpareto/time.hpp"

#include <array>
#include <cstdlib>

namespace tpareto {

namespace {

constexpr std::array<std::int64_t, 10> pow10 = {
    1,       10,       100,       1000,       10000,
    100000,  1000000,  10000000,  100000000,  1000000000,
};

bool add_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_add_overflow(a, b, &out);
}

bool mul_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}

} // namespace

std::int64_t time_scale::ticks_per_unit() const {
    if (fraction_digits < 0 || fraction_digits > 9)
        throw input_error("time scale must be between 0 and 9 fractional digits");
    return pow10[static_cast<std::size_t>(fraction_digits)];
}

time_value parse_time(std::string_view text, const time_scale& scale) {
    const std::int64_t unit = scale.ticks_per_unit();
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }

    auto fail = [&](const char* why) -> time_value {
        throw input_error("bad time value '" + std::string(text) + "': " + why);
    };

    std::int64_t integral = 0;
    std::size_t digits = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i, ++digits) {
        if (mul_overflows(integral, 10, integral) ||
            add_overflows(integral, text[i] - '0', integral))
            fail("tick overflow");
    }
    if (digits == 0) fail("expected a digit");

    std::int64_t fraction = 0;
    int fraction_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            if (++fraction_digits > scale.fraction_digits)
                fail("more fractional digits than the time scale allows");
            fraction = fraction * 10 + (text[i] - '0');
        }
        if (fraction_digits == 0) fail("expected a digit after '.'");
    }
    if (i != text.size()) fail("trailing characters");

    // value = integral * unit + fraction * 10^(scale - fraction_digits)
    fraction *= pow10[static_cast<std::size_t>(scale.fraction_digits - fraction_digits)];
    std::int64_t ticks = 0;
    if (mul_overflows(integral, unit, ticks) || add_overflows(ticks, fraction, ticks))
        fail("tick overflow");
    return negative ? -ticks : ticks;
}

std::string format_time(time_value ticks, const time_scale& scale) {
    const std::int64_t unit = scale.ticks_per_unit();
    const bool negative = ticks < 0;
    // Avoid overflow on INT64_MIN by working with the magnitude as unsigned.
    std::uint64_t magnitude = negative
        ? ~static_cast<std::uint64_t>(ticks) + 1
        : static_cast<std::uint64_t>(ticks);
    const std::uint64_t uunit = static_cast<std::uint64_t>(unit);

    std::string out;
    if (negative) out.push_back('-');
    out += std::to_string(magnitude / uunit);
    std::uint64_t rem = magnitude % uunit;
    if (rem != 0) {
        std::string frac = std::to_string(rem);
        frac.insert(0, static_cast<std::size_t>(scale.fraction_digits) - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out.push_back('.');
        out += frac;
    }
    return out;
}

} // namespace tpareto
