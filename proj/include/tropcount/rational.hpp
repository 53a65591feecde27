#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tropcount {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws SchemaError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers still carry "/1".
std::string format_rational(const Rational& value);

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

}  // namespace tropcount
