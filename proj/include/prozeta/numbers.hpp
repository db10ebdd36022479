// Exact integer and rational arithmetic used across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace prozeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binom(top, bottom); zero whenever bottom < 0 or bottom > top.
Int binomial(long top, long bottom);

Int factorial(long n);

Int pow_int(const Int& base, unsigned long exp);

// Narrow an Int to int64, throwing std::overflow_error when it does not fit.
std::int64_t to_int64(const Int& v);

// Render an exact rational with the given number of significant digits,
// rounding half away from zero. Deterministic; used only at output
// boundaries, never in branch decisions.
std::string decimal_string(const Rat& value, int significant_digits = 12);

}  // namespace prozeta
