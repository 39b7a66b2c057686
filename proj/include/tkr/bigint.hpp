#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

#include "tkr/errors.hpp"

namespace tkr {

// Arbitrary-precision signed integer; all arithmetic in the library is exact.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Checked narrowing, used when emitting JSON numbers.
inline long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    fail("Overflow", "integer too large for a 64-bit JSON number: " + v.str());
  }
  return static_cast<long long>(v);
}

}  // namespace tkr
