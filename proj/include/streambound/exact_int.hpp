#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace streambound {

// Exact signed integer used for all sequence and bound arithmetic.
//
// 256 bits hold every k-step Fibonacci value F_k(i) for i <= 255 (the terms
// grow no faster than 2^(i-2)), which comfortably covers every table the CLI
// can emit at desk scale. The checked backend throws std::overflow_error on
// any operation that would exceed the width, so overflow is always a reported
// failure and never a silent wraparound.
using ExactInt = boost::multiprecision::checked_int256_t;

}  // namespace streambound
