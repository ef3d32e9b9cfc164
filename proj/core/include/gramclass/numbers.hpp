#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gramclass {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// signed integer; Rat an arbitrary-precision rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Quotient rounded toward negative infinity. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

}  // namespace gramclass
