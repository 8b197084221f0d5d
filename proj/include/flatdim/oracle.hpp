#pragma once

#include <flatdim/exact.hpp>
#include <flatdim/modp.hpp>

#include <cstdint>
#include <vector>

namespace flatdim {

// Configuration of the finite-field rank oracle. Results are a
// deterministic function of (inputs, seed, prime).
struct OracleConfig {
    std::uint32_t prime = modp::kMersenne31;  // field modulus, must be prime
    std::uint64_t seed = 1;                   // RNG seed for flats and sample points
    long long samples_per_flat = 2;  // point-count multiplier on the per-flat condition count
};

// Brute-force check of the actual dimension at desk scale: realizes each
// flat as the zero set of 2 random independent linear forms over F_p,
// imposes vanishing (with all partial derivatives of order < m for
// multiplicity m) at random points of the flat, and returns
//
//   (number of degree-t monomials) - rank(condition matrix).
//
// Over a general configuration this equals adim with probability
// >= 1 - (matrix size)^2 / prime; agreement across several seeds/primes is
// the intended use. A large prime stands in for characteristic 0, so the
// result can only ever come out too small, never too large.
//
// Desk-scale limits: 2 <= n <= 5, 0 <= t <= 10, multiplicities in 1..4
// (zeros dropped), monomial count <= 5000, prime > both matrix dimensions.
ExactInt adim_rank_oracle(int n, const std::vector<long long>& multiplicities, long long t,
                          const OracleConfig& cfg = {});

}  // namespace flatdim
