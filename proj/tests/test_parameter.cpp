#include <doctest.h>

#include "gieseker/errors.hpp"
#include "gieseker/parameter.hpp"

using namespace gieseker;

TEST_CASE("rational parameters are stored reduced") {
    const auto a = ParameterValue::rational(2, 4);
    CHECK(a.to_string() == "1/2");
    CHECK(a == ParameterValue::rational(1, 2));
    CHECK(ParameterValue::rational(-6, 3).to_string() == "-2");
    CHECK(ParameterValue::rational(3, -6).to_string() == "-1/2");
}

TEST_CASE("denominator with bound") {
    const auto a = ParameterValue::rational(-5, 3);
    CHECK(a.denominator(3) == 3);
    CHECK_FALSE(a.denominator(2).has_value());
    CHECK_FALSE(ParameterValue::irrational().denominator(100).has_value());
    CHECK(ParameterValue::rational(4).denominator(1) == 1);
    CHECK(*ParameterValue::rational(7, 12).exact_denominator() == 12);
    CHECK_FALSE(ParameterValue::irrational().exact_denominator().has_value());
}

TEST_CASE("shift and reflection") {
    CHECK(ParameterValue::rational(-3, 2).reflected(1).to_string() == "1/2");
    CHECK(ParameterValue::rational(1, 2).shifted(1).to_string() == "3/2");
    CHECK(ParameterValue::irrational().reflected(2).is_irrational());
    CHECK(ParameterValue::irrational().shifted(2).is_irrational());
    CHECK_THROWS_AS(ParameterValue::irrational().value(), std::logic_error);
}

TEST_CASE("signs") {
    CHECK(ParameterValue::rational(1, 3).is_positive());
    CHECK(ParameterValue::rational(-1, 3).is_negative());
    CHECK_FALSE(ParameterValue::rational(0).is_positive());
    CHECK_FALSE(ParameterValue::rational(0).is_negative());
    CHECK_FALSE(ParameterValue::irrational().is_positive());
}

TEST_CASE("parsing") {
    CHECK(parse_parameter("-1/2") == ParameterValue::rational(-1, 2));
    CHECK(parse_parameter("3") == ParameterValue::rational(3));
    CHECK(parse_parameter("+3/6") == ParameterValue::rational(1, 2));
    CHECK(parse_parameter("irrational").is_irrational());
    CHECK_THROWS_AS(parse_parameter("0.5"), ParseError);
    CHECK_THROWS_AS(parse_parameter("1/0"), ParseError);
    CHECK_THROWS_AS(parse_parameter("1/"), ParseError);
    CHECK_THROWS_AS(parse_parameter(""), ParseError);
    CHECK_THROWS_AS(parse_parameter("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational("irrational"), ParseError);
    CHECK(parse_rational("10/4") == mpq_class(5, 2));
}
