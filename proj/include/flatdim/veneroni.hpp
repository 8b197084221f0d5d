#pragma once

#include <iosfwd>
#include <vector>

namespace flatdim {

// The linear system dH - m_1 P_1 - ... - m_s P_s of degree-d forms
// vanishing to order m_i along the i-th flat. Entries are kept in
// positional order (flat i maps to flat i under the transform) and may be
// any integer after a formal transform; `valid` records whether the system
// is an honest one (degree and all multiplicities nonnegative).
struct LinearSystem {
    int ambient_dim = 2;
    long long degree = 0;
    std::vector<long long> multiplicities;
    bool valid = true;

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

// Builds a system with the validity flag computed. Requires n >= 2.
LinearSystem make_system(int ambient_dim, long long degree, std::vector<long long> multiplicities);

// Pullback of a system supported on n+1 general codimension-2 flats under
// the degree-n birational self-map of P^n they define. With M = sum m_j:
//
//   degree' = n*d - (n-1)*M,    m_i' = d - (M - m_i).
//
// Applied formally to any integer inputs (the map is an involution on the
// formal extension); the output's validity flag says whether the result is
// an honest system. Throws unless the system has exactly n+1 multiplicities.
LinearSystem veneroni_pullback(const LinearSystem& sys);

// The degree n+k system through n+1 flats with multiplicity 1:
// (n+k)H - P_1 - ... - P_{n+1}. Requires n >= 2.
LinearSystem family_source(int ambient_dim, long long k);

std::ostream& operator<<(std::ostream& os, const LinearSystem& sys);

}  // namespace flatdim
