#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace bipdisc {

// Exact rational arithmetic for discrepancies and thresholds. Values stay
// small (numerators bounded by n^2, denominators by ~2^58 for derived
// parameters), so a 64-bit base type with boost's reducing operators is safe.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rat& r);

// Accepts "p/q", integers, and plain decimals ("0.25", "-1.5").
std::optional<Rat> parse_rational(const std::string& text);

// r^4 <= hi_num / hi_den, evaluated exactly in 128-bit intermediates.
bool fourth_power_leq(const Rat& r, long long hi_num, long long hi_den);

// Largest k >= 0 with k^4 <= x.
long long floor_fourth_root(unsigned __int128 x);

// The comparisons below are evaluated with 128-bit cross products instead of
// rational arithmetic, so thresholds with large reduced denominators (the
// derived parameters eta and c) never overflow an intermediate sum.

// value + slack_num/slack_den >= target
bool meets_bound_with_slack(const Rat& value, long long slack_num, long long slack_den,
                            const Rat& target);

// value >= r * scale
bool value_geq_scaled(long long value, const Rat& r, long long scale);

// (num/den)^2 <= factor * r
bool square_leq_scaled(long long num, long long den, long long factor, const Rat& r);

}  // namespace bipdisc
