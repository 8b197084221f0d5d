#include <flatdim/modp.hpp>

#include <stdexcept>

namespace flatdim::modp {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p)
{
    // extended Euclid on (a, p)
    std::int64_t r0 = a % p, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1)
        throw std::invalid_argument("invmod: argument not invertible");
    if (s0 < 0)
        s0 += p;
    return static_cast<std::uint32_t>(s0);
}

void axpy_generic_scalar(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                         std::size_t len, std::uint32_t p)
{
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t t = acc[i] + static_cast<std::uint64_t>(c) * row[i];
        acc[i] = static_cast<std::uint32_t>(t % p);
    }
}

namespace {

// Reduce t < 2^63 mod 2^31 - 1 by folding the high bits twice.
inline std::uint32_t mersenne_reduce(std::uint64_t t)
{
    t = (t & kMersenne31) + (t >> 31);
    t = (t & kMersenne31) + (t >> 31);
    if (t >= kMersenne31)
        t -= kMersenne31;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

void axpy_mersenne_scalar(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                          std::size_t len)
{
    for (std::size_t i = 0; i < len; ++i)
        acc[i] = mersenne_reduce(acc[i] + static_cast<std::uint64_t>(c) * row[i]);
}

#if defined(FLATDIM_HAVE_AVX2_KERNEL)
bool cpu_has_avx2()
{
    return __builtin_cpu_supports("avx2");
}
#else
bool cpu_has_avx2()
{
    return false;
}
#endif

namespace {

void axpy_mersenne_scalar_adapter(std::uint32_t* acc, const std::uint32_t* row,
                                  std::uint32_t c, std::size_t len, std::uint32_t)
{
    axpy_mersenne_scalar(acc, row, c, len);
}

#if defined(FLATDIM_HAVE_AVX2_KERNEL)
void axpy_mersenne_avx2_adapter(std::uint32_t* acc, const std::uint32_t* row,
                                std::uint32_t c, std::size_t len, std::uint32_t)
{
    axpy_mersenne_avx2(acc, row, c, len);
}
#endif

}  // namespace

RowOps::RowOps(std::uint32_t prime) : p_(prime)
{
    if (prime < 2)
        throw std::invalid_argument("RowOps: modulus must be >= 2");
    if (prime == kMersenne31) {
#if defined(FLATDIM_HAVE_AVX2_KERNEL)
        if (cpu_has_avx2()) {
            axpy_ = axpy_mersenne_avx2_adapter;
            kernel_name_ = "mersenne31-avx2";
            return;
        }
#endif
        axpy_ = axpy_mersenne_scalar_adapter;
        kernel_name_ = "mersenne31-scalar";
        return;
    }
    axpy_ = axpy_generic_scalar;
    kernel_name_ = "generic-scalar";
}

void RowOps::scale(std::uint32_t* row, std::uint32_t c, std::size_t len) const
{
    for (std::size_t i = 0; i < len; ++i)
        row[i] = mulmod(row[i], c, p_);
}

}  // namespace flatdim::modp
