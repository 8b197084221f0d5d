#include <doctest.h>

#include <flatdim/bounds.hpp>
#include <flatdim/hilbert.hpp>

#include <stdexcept>

using flatdim::adim_family;
using flatdim::adim_upper_mult1;
using flatdim::DimensionReport;
using flatdim::ExactInt;
using flatdim::family_conditions_check;
using flatdim::lower_certificate;
using flatdim::polybinom;
using flatdim::report_mult1;
using flatdim::ReportStatus;
using flatdim::s_formula;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("upper bound golden values")
{
    CHECK(adim_upper_mult1(4, 5, 7) == 160);  // peeling chain 56+38+25+16+25
    CHECK(adim_upper_mult1(4, 12, 2) == 0);
    CHECK(adim_upper_mult1(3, 4, 6) == 56);
    for (long long n = 2; n <= 6; ++n)
        CHECK(adim_upper_mult1(n, 0, 3) == polybinom(3 + n, n));
    CHECK_THROWS_AS(adim_upper_mult1(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(adim_upper_mult1(4, -1, 3), std::invalid_argument);
}

TEST_CASE("upper bound degenerate degrees")
{
    CHECK(adim_upper_mult1(5, 3, -2) == 0);
    CHECK(adim_upper_mult1(5, 0, 0) == 1);
    CHECK(adim_upper_mult1(5, 2, 0) == 0);
}

TEST_CASE("lower certificate")
{
    CHECK(lower_certificate(4, 5, 7));       // only p=1: S(2,4,7) = 32 > 0
    CHECK_FALSE(lower_certificate(4, 12, 2));  // S(2,11,2) = -5
    CHECK(lower_certificate(3, 4, 6));       // empty range
    CHECK(s_formula(2, 4, 7) == 32);
}

TEST_CASE("family conditions hold for k >= 3")
{
    CHECK(family_conditions_check(4, 3));
    CHECK(family_conditions_check(21, 4));
    for (long long n = 2; n <= 40; ++n)
        for (long long k = 3; k <= 6; ++k)
            CHECK(family_conditions_check(n, k));
}

TEST_CASE("adim_family")
{
    CHECK(adim_family(21, 4) == 1337982976);
    CHECK(adim_family(4, 3) == 160);
    CHECK(adim_family(3, 3) == 56);
    CHECK_THROWS_AS(adim_family(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(adim_family(2, 3), std::invalid_argument);
}

TEST_CASE("report bundles the sandwich")
{
    const DimensionReport a = report_mult1(4, 5, 7);
    CHECK(a.vdim == 160);
    CHECK(a.adim_upper == 160);
    CHECK(a.lower_certified);
    REQUIRE(a.adim_exact.has_value());
    CHECK(*a.adim_exact == 160);
    CHECK(a.status == ReportStatus::ExactKnown);

    const DimensionReport b = report_mult1(4, 12, 2);
    CHECK(b.vdim == 9);
    CHECK(b.adim_upper == 0);
    CHECK_FALSE(b.lower_certified);
    CHECK_FALSE(b.adim_exact.has_value());
    CHECK(b.status == ReportStatus::BoundedOnly);

    const DimensionReport c = report_mult1(2, 3, 5);
    CHECK(c.vdim == 18);
    CHECK(c.adim_upper == 18);
    CHECK(c.lower_certified);
    REQUIRE(c.adim_exact.has_value());
    CHECK(*c.adim_exact == 18);
}

TEST_CASE("family sandwich closes with positive value")
{
    for (long long n = 3; n <= 12; ++n)
        for (long long k = 3; k <= 6; ++k) {
            const DimensionReport r = report_mult1(n, n + 1, n + k);
            CHECK(r.status == ReportStatus::ExactKnown);
            REQUIRE(r.adim_exact.has_value());
            CHECK(*r.adim_exact == s_formula(n, n + 1, n + k));
            CHECK(*r.adim_exact > 0);
        }
}

TEST_CASE("adding a flat never raises the bound")
{
    for (long long n = 2; n <= 6; ++n)
        for (long long s = 1; s <= 8; ++s)
            for (long long t = 0; t <= 12; ++t)
                CHECK(adim_upper_mult1(n, s, t) <= adim_upper_mult1(n, s - 1, t));
}

TEST_CASE("certified instances keep the bound above the floor")
{
    for (long long n = 2; n <= 6; ++n)
        for (long long s = 0; s <= 8; ++s)
            for (long long t = 0; t <= 12; ++t) {
                if (!lower_certificate(n, s, t))
                    continue;
                ExactInt floor = s_formula(n, s, t);
                if (floor < 0)
                    floor = 0;
                CHECK(adim_upper_mult1(n, s, t) >= floor);
            }
}

TEST_SUITE_END();
