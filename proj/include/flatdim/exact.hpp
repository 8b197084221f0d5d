#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flatdim {

// Signed integer of unbounded magnitude. Every dimension count, binomial
// and condition number in the library is an ExactInt; nothing ever rounds
// or overflows. (The n=21, k=4 family already needs > 64 bits, and the
// intermediate binomials of the wide scans exceed 128.)
using ExactInt = mpz_class;

inline std::string to_decimal(const ExactInt& v) { return v.get_str(); }

// gmpxx has no long long constructor; go through long (lossless on LP64)
// with a two-limb fallback elsewhere.
inline ExactInt exact_of(long long v)
{
    if constexpr (sizeof(long) >= sizeof(long long))
        return ExactInt(static_cast<long>(v));
    ExactInt hi(static_cast<long>(v >> 32));
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 32);
    return hi + ExactInt(static_cast<unsigned long>(
                     static_cast<unsigned long long>(v) & 0xffffffffULL));
}

// Strict decimal parse: optional leading '-', digits only.
inline ExactInt exact_from_decimal(const std::string& s)
{
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("exact_from_decimal: empty integer");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("exact_from_decimal: not a decimal integer: " + s);
    return ExactInt(s, 10);
}

}  // namespace flatdim
