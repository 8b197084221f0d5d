#pragma once

#include <flatdim/exact.hpp>

#include <optional>

namespace flatdim {

enum class ReportStatus { ExactKnown, BoundedOnly };

// Everything known about adim/vdim for one multiplicity-1 instance
// (s general codimension-2 flats of P^n, forms of degree t).
struct DimensionReport {
    long long ambient_dim = 0;
    long long count = 0;
    long long degree = 0;
    ExactInt vdim;
    ExactInt adim_upper;            // always >= 0
    bool lower_certified = false;   // adim >= vdim guaranteed
    std::optional<ExactInt> adim_exact;
    ReportStatus status = ReportStatus::BoundedOnly;
};

// Castelnuovo-peeling upper bound U(n,s,t) for the actual dimension of
// degree-t forms through s general codimension-2 flats (multiplicity 1):
//   t < 0          -> 0
//   t = 0          -> 1 if s = 0 else 0
//   s = 0          -> polybinom(t+n, n)
//   s = 1          -> max(S(n,1,t), 0)          (single flat is exact)
//   n = 2          -> max(polybinom(t+2,2)-s, 0) (points are exact)
//   n = 3          -> max(S(3,s,t), 0)           (general lines are exact)
//   otherwise      -> U(n, s-1, t-1) + U(n-1, s-1, t-1)
// Requires n >= 2, s >= 0.
ExactInt adim_upper_mult1(long long n, long long s, long long t);

// True iff S(n-2p, s-p, t) > 0 for every p in 1 .. N(n,s)-1 (vacuously true
// on an empty range); then adim >= vdim for the multiplicity-1 scheme.
bool lower_certificate(long long n, long long s, long long t);

// True iff S(n-2p, n+1-p, n+k) > 0 for all p in 0 .. floor(n/2)-1, the
// hypothesis chain behind the exact family dimension (guaranteed for k >= 3).
bool family_conditions_check(long long n, long long k);

// Exact actual dimension of the family instance: degree n+k forms through
// n+1 general codimension-2 flats of P^n, which equals S(n, n+1, n+k) and,
// via the degree-n birational transform, also the actual dimension of the
// k-fold fat system in degree kn+1. Requires n >= 3 and k >= 3; the result
// is strictly positive.
ExactInt adim_family(long long n, long long k);

// Bundle of the above plus the closed-form vdim; adim_exact is filled when
// the sandwich closes with a positive value (certificate holds and the
// upper bound meets vdim > 0).
DimensionReport report_mult1(long long n, long long s, long long t);

}  // namespace flatdim
