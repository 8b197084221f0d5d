#include <doctest.h>

#include <flatdim/binom.hpp>

#include <stdexcept>

using flatdim::ExactInt;
using flatdim::polybinom;

TEST_SUITE_BEGIN("exactmath");

namespace {

// independent reference: factorial quotient, valid for 0 <= b <= a <= 20
ExactInt binom_by_factorials(int a, int b)
{
    ExactInt num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("polybinom matches its defining examples")
{
    CHECK(polybinom(11, 4) == 330);
    CHECK(polybinom(1, 2) == 0);
    CHECK(polybinom(-3, 2) == 6);
    CHECK(polybinom(0, 0) == 1);
    CHECK(polybinom(-17, 0) == 1);
    CHECK(polybinom(1000000, 0) == 1);
}

TEST_CASE("polybinom agrees with the factorial quotient on the classical range")
{
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; b <= a; ++b)
            CHECK(polybinom(a, b) == binom_by_factorials(a, b));
}

TEST_CASE("polybinom vanishes for 0 <= x < m")
{
    for (long long m = 1; m <= 25; ++m)
        for (long long x = 0; x < m; ++x)
            CHECK(polybinom(x, m) == 0);
}

TEST_CASE("Pascal identity holds at every integer")
{
    for (long long x = -20; x <= 60; ++x)
        for (long long m = 1; m <= 30; ++m)
            CHECK(polybinom(x, m) == polybinom(x - 1, m) + polybinom(x - 1, m - 1));
}

TEST_CASE("negative upper arguments follow the reflection identity")
{
    // polybinom(-x, m) = (-1)^m C(x+m-1, m) for x >= 1
    for (long long x = 1; x <= 12; ++x)
        for (long long m = 0; m <= 12; ++m) {
            const ExactInt reflected = polybinom(x + m - 1, m);
            CHECK(polybinom(-x, m) == (m % 2 == 0 ? reflected : -reflected));
        }
}

TEST_CASE("a 64-bit-overflowing value comes out exact")
{
    // C(80, 40) does not fit in 64 bits
    CHECK(polybinom(80, 40) == ExactInt("107507208733336176461620"));
}

TEST_CASE("negative lower index is rejected")
{
    CHECK_THROWS_AS(polybinom(5, -1), std::invalid_argument);
}

TEST_SUITE_END();
