#include <doctest.h>

#include <flatdim/classify.hpp>

#include <stdexcept>

using flatdim::classify_family;
using flatdim::ClassificationRecord;
using flatdim::ExactInt;
using flatdim::scan;
using flatdim::Verdict;
using flatdim::verdict_of;

TEST_SUITE_BEGIN("classify");

TEST_CASE("verdict_of follows the dimension comparison")
{
    CHECK(verdict_of(5, 3) == Verdict::Unexpected);
    CHECK(verdict_of(5, -2) == Verdict::Unexpected);
    CHECK(verdict_of(3, 5) == Verdict::MissingExpected);
    CHECK(verdict_of(5, 5) == Verdict::Equal);
    CHECK(verdict_of(0, 9) == Verdict::NoForms);
    CHECK(verdict_of(0, 0) == Verdict::NoForms);
    CHECK(verdict_of(0, -4) == Verdict::NoForms);
}

TEST_CASE("classify_family golden instances")
{
    const ClassificationRecord a = classify_family(21, 4);
    CHECK(a.verdict == Verdict::MissingExpected);
    CHECK(a.adim == 1337982976);
    CHECK(a.vdim == ExactInt("12094627905536"));
    CHECK(a.deg_source == 25);
    CHECK(a.deg_target == 85);

    const ClassificationRecord b = classify_family(4, 3);
    CHECK(b.verdict == Verdict::Unexpected);
    CHECK(b.adim == 160);
    CHECK(b.vdim == 135);

    const ClassificationRecord c = classify_family(6, 3);
    CHECK(c.verdict == Verdict::Unexpected);
    CHECK(c.vdim == 0);

    CHECK(classify_family(16, 6).verdict == Verdict::MissingExpected);
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(classify_family(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_family(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(scan(2, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(scan(4, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scan(4, 10, 3), std::invalid_argument);
    CHECK_THROWS_AS(scan(4, 3, 10, 0), std::invalid_argument);
}

TEST_CASE("scan k=4 flips verdict at n=21")
{
    const auto records = scan(4, 3, 50);
    REQUIRE(records.size() == 48);
    for (const auto& rec : records) {
        CHECK(rec.k == 4);
        CHECK(rec.deg_source == rec.n + 4);
        CHECK(rec.deg_target == 4 * rec.n + 1);
        CHECK(rec.verdict == (rec.n <= 20 ? Verdict::Unexpected : Verdict::MissingExpected));
        CHECK(rec.verdict != Verdict::NoForms);
        CHECK(rec.deg_target == rec.n * rec.deg_source - (rec.n - 1) * (rec.n + 1));
    }
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(records[i].n == 3 + static_cast<long long>(i));
}

TEST_CASE("adim is always positive on the scan range")
{
    for (long long k = 3; k <= 6; ++k)
        for (const auto& rec : scan(k, 3, 50))
            CHECK(rec.adim > 0);
}

TEST_CASE("parallel scan matches the serial one")
{
    const auto serial = scan(5, 3, 30, 1);
    const auto parallel = scan(5, 3, 30, 4);
    CHECK(serial == parallel);
}

TEST_SUITE_END();
