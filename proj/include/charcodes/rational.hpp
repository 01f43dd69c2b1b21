#pragma once

#include <cstdint>

#include "charcodes/errors.hpp"

namespace charcodes {

/// Exact nonnegative rational for decoder slack parameters.
struct Rational {
    int64_t num = 1;
    int64_t den = 16;

    constexpr Rational() = default;
    constexpr Rational(int64_t n, int64_t d) : num(n), den(d) {}

    void validate() const {
        if (num <= 0 || den <= 0) throw InfeasibleParameters("slack must be a positive rational");
    }
};

/// x < (a/b - eps) * y, everything exact. Requires a, b, y >= 0.
inline bool below_slack_fraction(uint64_t x, uint64_t a, uint64_t b, Rational eps, uint64_t y) {
    // x < (a*eps.den - b*eps.num) * y / (b*eps.den)
    __int128 lhs = (__int128)x * b * eps.den;
    __int128 rhs = ((__int128)a * eps.den - (__int128)b * eps.num) * y;
    return lhs < rhs;
}

/// x <= (a/b - eps) * y.
inline bool at_most_slack_fraction(uint64_t x, uint64_t a, uint64_t b, Rational eps, uint64_t y) {
    __int128 lhs = (__int128)x * b * eps.den;
    __int128 rhs = ((__int128)a * eps.den - (__int128)b * eps.num) * y;
    return lhs <= rhs;
}

}  // namespace charcodes
