#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace indsets {

/// Exact arbitrary-precision integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace indsets
