#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace raag {

// Group orders can reach factorial scale (empty or complete graphs near the
// 64-vertex bound), so they are kept exact.
using bigint = boost::multiprecision::cpp_int;

inline bigint pow2(std::size_t e) { return bigint(1) << e; }

}  // namespace raag
