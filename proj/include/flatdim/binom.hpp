#pragma once

#include <flatdim/exact.hpp>

namespace flatdim {

// Binomial coefficient read as a polynomial in its upper argument:
//
//   polybinom(x, m) = x (x-1) ... (x-m+1) / m!
//
// defined for every integer x, including negatives, and every m >= 0;
// polybinom(x, 0) = 1. Agrees with the combinatorial C(x, m) for
// x >= m >= 0 and vanishes for 0 <= x < m. Throws std::invalid_argument
// for m < 0.
ExactInt polybinom(long long x, long long m);

}  // namespace flatdim
