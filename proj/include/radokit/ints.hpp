// Arbitrary-precision integer type used throughout the toolkit.
// Witness coefficients are products of up to k-2 partial sums and overflow
// 64 bits already for moderate equations, so exact big integers are used
// from the start.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace radokit {

using Int = boost::multiprecision::cpp_int;

// A finite sequence of integers; the carrier of u-equivalence.
using IntString = std::vector<Int>;

// Parses a decimal integer with optional leading '-'.
// Throws InvalidInput on malformed text.
Int int_from_decimal(const std::string& text);

inline std::string int_to_decimal(const Int& value) { return value.str(); }

} // namespace radokit
