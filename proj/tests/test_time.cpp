#include <doctest.h>

#include "tpareto/time.hpp"

using namespace tpareto;

TEST_CASE("parse_time scales decimals to ticks") {
    time_scale s3{3};
    CHECK(parse_time("0", s3) == 0);
    CHECK(parse_time("5", s3) == 5000);
    CHECK(parse_time("1.5", s3) == 1500);
    CHECK(parse_time("0.001", s3) == 1);
    CHECK(parse_time("-2.25", s3) == -2250);
    CHECK(parse_time("+7", s3) == 7000);

    time_scale s0{0};
    CHECK(parse_time("42", s0) == 42);
}

TEST_CASE("parse_time rejects malformed input") {
    time_scale s3{3};
    CHECK_THROWS_AS(parse_time("", s3), input_error);
    CHECK_THROWS_AS(parse_time("abc", s3), input_error);
    CHECK_THROWS_AS(parse_time("1.", s3), input_error);
    CHECK_THROWS_AS(parse_time("1.2345", s3), input_error); // too many fraction digits
    CHECK_THROWS_AS(parse_time("1x", s3), input_error);
    CHECK_THROWS_AS(parse_time("99999999999999999999", s3), input_error); // overflow
    CHECK_THROWS_AS(parse_time("1.5", time_scale{0}), input_error);
}

TEST_CASE("format_time renders ticks back through the scale") {
    time_scale s3{3};
    CHECK(format_time(0, s3) == "0");
    CHECK(format_time(5000, s3) == "5");
    CHECK(format_time(1500, s3) == "1.5");
    CHECK(format_time(1, s3) == "0.001");
    CHECK(format_time(-2250, s3) == "-2.25");
}

TEST_CASE("parse and format round-trip") {
    time_scale s2{2};
    for (time_value t : {-12345, -1, 0, 1, 99, 100, 12345678})
        CHECK(parse_time(format_time(t, s2), s2) == t);
}
