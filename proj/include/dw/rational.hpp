#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace dw {

// Exact rationals for partition functions. Counts at desk scale fit
// comfortably in 64 bits.
using Rational = boost::rational<std::int64_t>;

}  // namespace dw
