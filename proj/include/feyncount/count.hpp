#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace feyncount {

/// Exact signed integer used for every diagram count and coefficient.
using Count = boost::multiprecision::cpp_int;

/// Perturbation order (number of interaction lines).
using Order = unsigned;

/// Exact decimal rendering; counts never leave the library as floats or
/// fixed-width integers.
inline std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace feyncount
