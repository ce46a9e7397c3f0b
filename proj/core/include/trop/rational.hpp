#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trop {

using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Canonical text: "3", "-1", "5/2".
std::string to_string(const Rational& q);

// Accepts integers, fractions ("-5/2") and decimals ("0.25").
Rational parse_rational(std::string_view text);

inline int sgn(const Rational& q) { return ::sgn(q); }

}  // namespace trop
