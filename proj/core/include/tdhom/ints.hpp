#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tdhom {

// Counts are exact and unbounded; all count arithmetic goes through this type.
using HomCount = boost::multiprecision::cpp_int;

// Exact rational scalar for the small linear solves.
using Rational = boost::multiprecision::cpp_rational;

} // namespace tdhom
