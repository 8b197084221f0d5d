// AVX2 variant of the Mersenne-31 axpy kernel. This translation unit is the
// only one compiled with -mavx2; callers reach it through RowOps, which
// checks for AVX2 support at runtime first.

#include <flatdim/modp.hpp>

#if defined(FLATDIM_HAVE_AVX2_KERNEL)

#include <immintrin.h>

namespace flatdim::modp {

namespace {

// Fold t (< 2^63 per 64-bit lane) mod 2^31 - 1: two high/low folds leave a
// value <= p + 4, fixed by one conditional subtract.
inline __m256i mersenne_reduce64(__m256i t)
{
    const __m256i mask = _mm256_set1_epi64x(kMersenne31);
    t = _mm256_add_epi64(_mm256_and_si256(t, mask), _mm256_srli_epi64(t, 31));
    t = _mm256_add_epi64(_mm256_and_si256(t, mask), _mm256_srli_epi64(t, 31));
    const __m256i ge = _mm256_cmpgt_epi64(t, _mm256_set1_epi64x(kMersenne31 - 1));
    return _mm256_sub_epi64(t, _mm256_and_si256(ge, mask));
}

}  // namespace

void axpy_mersenne_avx2(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                        std::size_t len)
{
    const __m256i cv = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        // widen the two 128-bit halves to 64-bit lanes
        const __m256i a_lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(a));
        const __m256i a_hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(a, 1));
        const __m256i r_lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(r));
        const __m256i r_hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(r, 1));
        // acc + c*row per lane: < 2^31 + (2^31-2)^2 < 2^63
        const __m256i t_lo =
            mersenne_reduce64(_mm256_add_epi64(a_lo, _mm256_mul_epu32(r_lo, cv)));
        const __m256i t_hi =
            mersenne_reduce64(_mm256_add_epi64(a_hi, _mm256_mul_epu32(r_hi, cv)));
        // narrow back: take dwords 0,2,4,6 of each half
        const __m256i pick_lo = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
        const __m256i pick_hi = _mm256_setr_epi32(0, 0, 0, 0, 0, 2, 4, 6);
        const __m256i packed = _mm256_blend_epi32(_mm256_permutevar8x32_epi32(t_lo, pick_lo),
                                                  _mm256_permutevar8x32_epi32(t_hi, pick_hi),
                                                  0xF0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), packed);
    }
    if (i < len)
        axpy_mersenne_scalar(acc + i, row + i, c, len - i);
}

}  // namespace flatdim::modp

#endif  // FLATDIM_HAVE_AVX2_KERNEL
