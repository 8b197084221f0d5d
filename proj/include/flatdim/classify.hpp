#pragma once

#include <flatdim/exact.hpp>
#include <flatdim/hilbert.hpp>

#include <vector>

namespace flatdim {

// Comparison of actual and virtual dimension for one system:
//   Unexpected       adim > 0 and adim > vdim
//   MissingExpected  vdim > adim > 0
//   Equal            adim = vdim > 0
//   NoForms          adim = 0
enum class Verdict { Unexpected, MissingExpected, Equal, NoForms };

Verdict verdict_of(const ExactInt& adim, const ExactInt& vdim);

// One row of a parameter sweep over the transform family: the degree n+k
// multiplicity-1 system on n+1 flats and its degree kn+1 image with
// multiplicities k. adim is exact (the transform preserves it and the
// sandwich closes on the source); vdim is the recursion's value for the
// image system.
struct ClassificationRecord {
    long long n = 0;
    long long k = 0;
    long long deg_source = 0;  // n + k
    long long deg_target = 0;  // k*n + 1
    ExactInt adim;
    ExactInt vdim;
    Verdict verdict = Verdict::NoForms;

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

// Requires n >= 3 and k >= 3 (the range where the exact family dimension
// is available).
ClassificationRecord classify_family(long long n, long long k, VdimMemo& memo);
ClassificationRecord classify_family(long long n, long long k);

// One record per n in [n_min, n_max], ordered by n. `jobs` > 1 evaluates
// rows on that many worker threads, each with a private memo; the output
// is identical and ordered regardless.
std::vector<ClassificationRecord> scan(long long k, long long n_min, long long n_max,
                                       int jobs = 1);

}  // namespace flatdim
