#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace mdstab
{
    // Exact fraction, always in lowest terms with a positive denominator.
    using Rational = boost::rational<std::int64_t>;

    [[nodiscard]] auto to_string(const Rational & q) -> std::string;

    [[nodiscard]] auto to_double(const Rational & q) -> double;

    // Accepts "p/q", "p" or a terminating decimal such as "0.625".
    [[nodiscard]] auto parse_rational(const std::string & text) -> Rational;

    // lhs < q * rhs without floating point; used for "degree below threshold x order".
    [[nodiscard]] auto less_than_scaled(std::int64_t lhs, const Rational & q, std::int64_t rhs) -> bool;

    // lhs > q * rhs.
    [[nodiscard]] auto greater_than_scaled(std::int64_t lhs, const Rational & q, std::int64_t rhs) -> bool;
}
