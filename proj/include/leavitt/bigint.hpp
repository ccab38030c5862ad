#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace leavitt {

// Exact arbitrary-precision integer used throughout: entries of elimination
// intermediates and path counts both overflow 64 bits at very modest sizes.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace leavitt
