#include <doctest.h>

#include <flatdim/modp.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

using namespace flatdim::modp;

TEST_SUITE_BEGIN("modp");

namespace {

std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t len, std::uint32_t p)
{
    std::vector<std::uint32_t> v(len);
    for (auto& x : v)
        x = static_cast<std::uint32_t>(rng() % p);
    return v;
}

// widest-arithmetic reference, one element at a time
void axpy_reference(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& row,
                    std::uint32_t c, std::uint32_t p)
{
    for (std::size_t i = 0; i < acc.size(); ++i) {
        const unsigned __int128 t =
            static_cast<unsigned __int128>(acc[i]) + static_cast<unsigned __int128>(c) * row[i];
        acc[i] = static_cast<std::uint32_t>(t % p);
    }
}

}  // namespace

TEST_CASE("mulmod and invmod")
{
    std::mt19937_64 rng(7);
    for (const std::uint32_t p : {2u, 3u, 1009u, 999999937u, kMersenne31}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = static_cast<std::uint32_t>(rng() % p);
            const auto b = static_cast<std::uint32_t>(rng() % p);
            const unsigned __int128 wide =
                static_cast<unsigned __int128>(a) * b;
            CHECK(mulmod(a, b, p) == static_cast<std::uint32_t>(wide % p));
            if (a % p != 0)
                CHECK(mulmod(a, invmod(a, p), p) == 1);
        }
    }
    CHECK_THROWS(invmod(0, 17));
}

TEST_CASE("generic kernel matches the elementwise reference")
{
    std::mt19937_64 rng(11);
    for (const std::uint32_t p : {2u, 3u, 97u, 1009u, 999999937u, kMersenne31}) {
        for (const std::size_t len : {std::size_t{0}, std::size_t{1}, std::size_t{7},
                                      std::size_t{8}, std::size_t{33}, std::size_t{256}}) {
            auto acc = random_vec(rng, len, p);
            const auto row = random_vec(rng, len, p);
            const auto c = static_cast<std::uint32_t>(rng() % p);
            auto want = acc;
            axpy_reference(want, row, c, p);
            axpy_generic_scalar(acc.data(), row.data(), c, len, p);
            CHECK(acc == want);
        }
    }
}

TEST_CASE("mersenne scalar kernel is equivalent to the generic kernel")
{
    std::mt19937_64 rng(13);
    const std::uint32_t p = kMersenne31;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t len = static_cast<std::size_t>(rng() % 70);
        auto a1 = random_vec(rng, len, p);
        auto a2 = a1;
        const auto row = random_vec(rng, len, p);
        const auto c = static_cast<std::uint32_t>(rng() % p);
        axpy_generic_scalar(a1.data(), row.data(), c, len, p);
        axpy_mersenne_scalar(a2.data(), row.data(), c, len);
        CHECK(a1 == a2);
    }
    // boundary values: everything at p-1
    std::vector<std::uint32_t> acc(16, p - 1), row(16, p - 1), want(acc);
    axpy_reference(want, row, p - 1, p);
    axpy_mersenne_scalar(acc.data(), row.data(), p - 1, 16);
    CHECK(acc == want);
}

#if defined(FLATDIM_HAVE_AVX2_KERNEL)
TEST_CASE("avx2 kernel is equivalent to the scalar kernels")
{
    if (!cpu_has_avx2()) {
        MESSAGE("CPU lacks AVX2; dispatch falls back to scalar");
        return;
    }
    std::mt19937_64 rng(17);
    const std::uint32_t p = kMersenne31;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = static_cast<std::size_t>(rng() % 100);
        auto a1 = random_vec(rng, len, p);
        auto a2 = a1;
        const auto row = random_vec(rng, len, p);
        const auto c = static_cast<std::uint32_t>(rng() % p);
        axpy_mersenne_scalar(a1.data(), row.data(), c, len);
        axpy_mersenne_avx2(a2.data(), row.data(), c, len);
        CHECK(a1 == a2);
    }
    std::vector<std::uint32_t> acc(24, p - 1), row(24, p - 1), want(acc);
    axpy_reference(want, row, p - 1, p);
    axpy_mersenne_avx2(acc.data(), row.data(), p - 1, 24);
    CHECK(acc == want);
}
#endif

TEST_CASE("RowOps picks a kernel per modulus")
{
    const RowOps mersenne(kMersenne31);
    CHECK(std::string(mersenne.kernel_name()).find("mersenne31") != std::string::npos);
    const RowOps generic(1009);
    CHECK(std::string(generic.kernel_name()) == "generic-scalar");

    std::mt19937_64 rng(19);
    for (const std::uint32_t p : {1009u, kMersenne31}) {
        const RowOps ops(p);
        auto acc = random_vec(rng, 65, p);
        auto want = acc;
        const auto row = random_vec(rng, 65, p);
        const auto c = static_cast<std::uint32_t>(rng() % p);
        axpy_reference(want, row, c, p);
        ops.axpy(acc.data(), row.data(), c, 65);
        CHECK(acc == want);

        auto scaled = row;
        ops.scale(scaled.data(), c, scaled.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            CHECK(scaled[i] == mulmod(row[i], c, p));
    }
}

TEST_SUITE_END();
