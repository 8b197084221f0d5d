#pragma once

#include <cstddef>
#include <cstdint>

// Arithmetic kernels over F_p for primes p < 2^31, used by the rank
// oracle's dense elimination. The hot loop is the fused multiply-add
//
//   acc[i] = (acc[i] + c * row[i]) mod p
//
// provided as a generic scalar kernel (any p), a scalar fast path for the
// Mersenne prime 2^31 - 1, and an AVX2 variant of the Mersenne path picked
// at runtime when the CPU supports it. All kernels are exact and
// equivalence-tested against each other.

namespace flatdim::modp {

inline constexpr std::uint32_t kMersenne31 = 2147483647u;  // 2^31 - 1

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t invmod(std::uint32_t a, std::uint32_t p);  // a != 0 mod p, p prime

// acc and row must not alias; all inputs reduced mod p.
void axpy_generic_scalar(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                         std::size_t len, std::uint32_t p);
void axpy_mersenne_scalar(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                          std::size_t len);
#if defined(FLATDIM_HAVE_AVX2_KERNEL)
void axpy_mersenne_avx2(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
                        std::size_t len);
#endif

bool cpu_has_avx2();

// Row operations over F_p with the fastest applicable kernel bound once at
// construction.
class RowOps {
public:
    explicit RowOps(std::uint32_t prime);

    std::uint32_t prime() const noexcept { return p_; }
    const char* kernel_name() const noexcept { return kernel_name_; }

    // acc[i] = (acc[i] + c * row[i]) mod p
    void axpy(std::uint32_t* acc, const std::uint32_t* row, std::uint32_t c,
              std::size_t len) const
    {
        axpy_(acc, row, c, len, p_);
    }
    // row[i] = c * row[i] mod p
    void scale(std::uint32_t* row, std::uint32_t c, std::size_t len) const;

private:
    using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::uint32_t,
                            std::size_t, std::uint32_t);
    std::uint32_t p_;
    AxpyFn axpy_;
    const char* kernel_name_;
};

}  // namespace flatdim::modp
