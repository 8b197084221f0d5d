#include <flatdim/verify.hpp>

#include <flatdim/binom.hpp>
#include <flatdim/bounds.hpp>
#include <flatdim/classify.hpp>
#include <flatdim/hilbert.hpp>
#include <flatdim/oracle.hpp>
#include <flatdim/render.hpp>
#include <flatdim/veneroni.hpp>

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace flatdim {

namespace {

class Checker {
public:
    void expect(bool ok, const std::function<std::string()>& detail)
    {
        ++checks_;
        if (!ok && failure_.empty())
            failure_ = detail();
    }
    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& what)
    {
        expect(got == want, [&] {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            return os.str();
        });
    }
    long long checks() const noexcept { return checks_; }
    bool ok() const noexcept { return failure_.empty(); }
    const std::string& failure() const noexcept { return failure_; }

private:
    long long checks_ = 0;
    std::string failure_;
};

long long cap_n(long long spec_max, const VerifyOptions& opts)
{
    if (opts.grid_max <= 0)
        return spec_max;
    return std::min(spec_max, std::max<long long>(opts.grid_max, 3));
}

ExactInt vdim_of(int n, std::vector<long long> mults, long long t)
{
    return vdim_recursive(FatFlatScheme(n, std::move(mults)), t);
}

void suite_polybinom(Checker& c, const VerifyOptions&)
{
    for (long long x = -20; x <= 60; ++x)
        for (long long m = 1; m <= 30; ++m)
            c.expect_eq(polybinom(x, m), polybinom(x - 1, m) + polybinom(x - 1, m - 1),
                        "Pascal at (" + std::to_string(x) + "," + std::to_string(m) + ")");
    for (long long m = 1; m <= 12; ++m)
        for (long long x = 0; x < m; ++x)
            c.expect_eq(polybinom(x, m), ExactInt(0),
                        "zero range at (" + std::to_string(x) + "," + std::to_string(m) + ")");
    // combinatorial values: Pascal-triangle reference
    std::vector<std::vector<ExactInt>> tri(21);
    for (int a = 0; a <= 20; ++a) {
        tri[a].resize(a + 1, 1);
        for (int b = 1; b < a; ++b)
            tri[a][b] = tri[a - 1][b - 1] + tri[a - 1][b];
        for (int b = 0; b <= a; ++b)
            c.expect_eq(polybinom(a, b), tri[a][b],
                        "C(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

void suite_golden_closed_form(Checker& c, const VerifyOptions&)
{
    c.expect_eq(s_formula(4, 5, 7), ExactInt(160), "S(4,5,7)");
    c.expect_eq(s_formula(3, 4, 6), ExactInt(56), "S(3,4,6)");
    c.expect_eq(s_formula(2, 11, 2), ExactInt(-5), "S(2,11,2)");
    c.expect_eq(s_formula(4, 12, 2), ExactInt(9), "S(4,12,2)");
}

void suite_golden_recursion(Checker& c, const VerifyOptions&)
{
    c.expect_eq(vdim_of(4, {3, 3, 3, 3, 3}, 13), ExactInt(135), "vdim_4(3^5,13)");
    c.expect_eq(vdim_of(3, {3, 3, 3, 3}, 10), ExactInt(54), "vdim_3(3^4,10)");
    c.expect_eq(vdim_of(3, {3, 3, 3}, 7), ExactInt(0), "vdim_3(3^3,7)");
    c.expect_eq(vdim_of(3, {3, 3}, 4), ExactInt(-9), "vdim_3(3^2,4)");
    c.expect_eq(vdim_of(2, {3, 3, 3}, 7), ExactInt(18), "vdim_2(3^3,7)");
    c.expect_eq(vdim_of(2, {3, 3}, 4), ExactInt(3), "vdim_2(3^2,4)");
    c.expect_eq(vdim_of(2, {3}, 1), ExactInt(-3), "vdim_2(3,1)");
    const int want6[] = {0, -729, -243, 0, 0, 0};
    for (int i = 0; i < 6; ++i) {
        const int s = 7 - i;
        c.expect_eq(vdim_of(6, std::vector<long long>(s, 3), 3 * (s - 1) + 1),
                    ExactInt(want6[i]), "vdim_6(3^" + std::to_string(s) + ")");
    }
}

void suite_golden_large(Checker& c, const VerifyOptions&)
{
    VdimMemo memo;
    const FatFlatScheme y21(21, std::vector<long long>(22, 4));
    c.expect_eq(vdim_recursive(y21, 85, memo), ExactInt("12094627905536"), "vdim_21(4^22,85)");
    c.expect_eq(vdim_recursive(y21, 86, memo), ExactInt("-157230162771968"), "vdim_21(4^22,86)");
    c.expect_eq(vdim_recursive(y21, 87, memo), ExactInt("96757023244288"), "vdim_21(4^22,87)");
    c.expect_eq(vdim_recursive(y21, 88, memo), ExactInt("2366593604971209"), "vdim_21(4^22,88)");
    c.expect_eq(adim_family(21, 4), ExactInt(1337982976), "adim_family(21,4)");
}

void suite_recurrence_grid(Checker& c, const VerifyOptions& opts)
{
    for (long long n = 2; n <= cap_n(12, opts); ++n)
        for (long long s = 1; s <= 12; ++s)
            for (long long t = -5; t <= 30; ++t)
                c.expect_eq(s_formula(n, s, t),
                            s_formula(n, s - 1, t - 1) + s_formula(n - 1, s - 1, t - 1),
                            "recurrence at (" + std::to_string(n) + "," + std::to_string(s) +
                                "," + std::to_string(t) + ")");
}

void suite_closed_form_vs_recursion(Checker& c, const VerifyOptions& opts)
{
    VdimMemo memo;
    for (long long n = 2; n <= cap_n(9, opts); ++n)
        for (long long s = 0; s <= 9; ++s)
            for (long long t = 0; t <= 20; ++t) {
                const FatFlatScheme ones(static_cast<int>(n), std::vector<long long>(s, 1));
                c.expect_eq(vdim_recursive(ones, t, memo), s_formula(n, s, t),
                            "equivalence at (" + std::to_string(n) + "," + std::to_string(s) +
                                "," + std::to_string(t) + ")");
            }
}

void suite_single_fat_flat(Checker& c, const VerifyOptions& opts)
{
    VdimMemo memo;
    for (long long n = 2; n <= cap_n(8, opts); ++n)
        for (long long m = 1; m <= 5; ++m)
            for (long long t = 0; t <= 15; ++t) {
                const FatFlatScheme one(static_cast<int>(n), {m});
                c.expect_eq(vdim_recursive(one, t, memo),
                            polybinom(t + n, n) - conditions_fat_flat(n, 2, m, t),
                            "single flat at (" + std::to_string(n) + "," + std::to_string(m) +
                                "," + std::to_string(t) + ")");
            }
    for (long long n = 3; n <= cap_n(30, opts); ++n)
        for (long long k = 3; k <= n; ++k)
            c.expect_eq(vdim_of(static_cast<int>(n), {k}, 1), ExactInt(0),
                        "vdim_n(k flat,1) at (" + std::to_string(n) + "," + std::to_string(k) +
                            ")");
}

void suite_sandwich(Checker& c, const VerifyOptions& opts)
{
    const DimensionReport a = report_mult1(4, 5, 7);
    c.expect_eq(a.vdim, ExactInt(160), "report(4,5,7).vdim");
    c.expect_eq(a.adim_upper, ExactInt(160), "report(4,5,7).upper");
    c.expect(a.lower_certified, [] { return std::string("report(4,5,7) not certified"); });
    c.expect(a.status == ReportStatus::ExactKnown && a.adim_exact &&
                 *a.adim_exact == ExactInt(160),
             [] { return std::string("report(4,5,7) not exact 160"); });

    const DimensionReport b = report_mult1(4, 12, 2);
    c.expect_eq(b.vdim, ExactInt(9), "report(4,12,2).vdim");
    c.expect_eq(b.adim_upper, ExactInt(0), "report(4,12,2).upper");
    c.expect(!b.lower_certified && !b.adim_exact,
             [] { return std::string("report(4,12,2) wrongly certified"); });

    for (long long n = 3; n <= cap_n(12, opts); ++n)
        for (long long k = 3; k <= 6; ++k) {
            const DimensionReport r = report_mult1(n, n + 1, n + k);
            c.expect(r.status == ReportStatus::ExactKnown && r.adim_exact &&
                         *r.adim_exact == s_formula(n, n + 1, n + k) && *r.adim_exact > 0,
                     [n, k] {
                         return "family sandwich open at (" + std::to_string(n) + "," +
                                std::to_string(k) + ")";
                     });
        }
}

void suite_bound_properties(Checker& c, const VerifyOptions& opts)
{
    for (long long n = 2; n <= cap_n(6, opts); ++n)
        for (long long s = 1; s <= 8; ++s)
            for (long long t = 0; t <= 12; ++t) {
                const std::string at =
                    "(" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
                c.expect(adim_upper_mult1(n, s, t) <= adim_upper_mult1(n, s - 1, t),
                         [&at] { return "bound not monotone at " + at; });
                if (lower_certificate(n, s, t)) {
                    ExactInt lower = s_formula(n, s, t);
                    if (lower < 0)
                        lower = 0;
                    c.expect(adim_upper_mult1(n, s, t) >= lower,
                             [&at] { return "bound below certified floor at " + at; });
                }
            }
    for (long long n = 2; n <= cap_n(40, opts); ++n)
        for (long long k = 3; k <= 6; ++k)
            c.expect(family_conditions_check(n, k), [n, k] {
                return "family conditions fail at (" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
            });
}

void suite_veneroni(Checker& c, const VerifyOptions& opts)
{
    c.expect_eq(veneroni_pullback(make_system(4, 7, {1, 1, 1, 1, 1})),
                make_system(4, 13, {3, 3, 3, 3, 3}), "pullback of (4,7,1^5)");
    c.expect_eq(veneroni_pullback(make_system(21, 25, std::vector<long long>(22, 1))),
                make_system(21, 85, std::vector<long long>(22, 4)), "pullback of (21,25,1^22)");
    c.expect_eq(veneroni_pullback(make_system(3, 0, {0, 0, 0, 0})),
                make_system(3, 0, {0, 0, 0, 0}), "pullback of empty system");

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        auto val = [&rng]() { return static_cast<long long>(rng() % 26) - 5; };
        std::vector<long long> mults(static_cast<std::size_t>(n) + 1);
        for (auto& m : mults)
            m = val();
        const LinearSystem sys = make_system(n, val(), mults);
        c.expect_eq(veneroni_pullback(veneroni_pullback(sys)), sys,
                    "involution on trial " + std::to_string(trial));
    }

    for (long long n = 2; n <= cap_n(30, opts); ++n)
        for (long long k = 0; k <= 8; ++k)
            c.expect_eq(
                veneroni_pullback(family_source(static_cast<int>(n), k)),
                make_system(static_cast<int>(n), k * n + 1,
                            std::vector<long long>(static_cast<std::size_t>(n) + 1, k)),
                "family identity at (" + std::to_string(n) + "," + std::to_string(k) + ")");
}

void suite_scan_tables(Checker& c, const VerifyOptions&)
{
    struct Band {
        long long lo, hi;
        Verdict want;
    };
    const std::vector<std::pair<long long, std::vector<Band>>> tables = {
        {3, {{3, 50, Verdict::Unexpected}}},
        {4, {{3, 20, Verdict::Unexpected}, {21, 50, Verdict::MissingExpected}}},
        {5,
         {{3, 17, Verdict::Unexpected},
          {18, 41, Verdict::MissingExpected},
          {42, 50, Verdict::Unexpected}}},
        {6,
         {{3, 15, Verdict::Unexpected},
          {16, 36, Verdict::MissingExpected},
          {37, 50, Verdict::Unexpected}}},
    };
    for (const auto& [k, bands] : tables) {
        const auto records = scan(k, 3, 50);
        for (const auto& rec : records) {
            Verdict want = Verdict::NoForms;
            for (const auto& b : bands)
                if (rec.n >= b.lo && rec.n <= b.hi)
                    want = b.want;
            c.expect(rec.verdict == want, [&rec, want] {
                return "scan k=" + std::to_string(rec.k) + " n=" + std::to_string(rec.n) +
                       ": got " + to_string(rec.verdict) + ", want " + to_string(want);
            });
            c.expect(rec.verdict != Verdict::NoForms,
                     [&rec] { return "NoForms at n=" + std::to_string(rec.n); });
            c.expect(rec.deg_target == rec.n * rec.deg_source - (rec.n - 1) * (rec.n + 1),
                     [&rec] { return "degree identity broken at n=" + std::to_string(rec.n); });
            if (k == 3 && rec.n >= 6)
                c.expect(rec.vdim <= 0, [&rec] {
                    return "k=3 vdim positive at n=" + std::to_string(rec.n);
                });
        }
    }
}

void suite_polynomiality(Checker& c, const VerifyOptions&)
{
    const std::vector<std::pair<int, std::vector<long long>>> samples = {
        {2, {3, 2}}, {3, {2, 2, 1}}, {4, {3, 1}}, {5, {2, 2, 2}}, {5, {4}},
    };
    VdimMemo memo;
    for (const auto& [n, mults] : samples) {
        const FatFlatScheme scheme(n, mults);
        std::vector<ExactInt> values;
        for (long long t = 0; t <= n + 1 + 5; ++t)
            values.push_back(vdim_recursive(scheme, t, memo));
        for (int order = 0; order < n + 1; ++order)
            for (std::size_t i = 0; i + 1 < values.size(); ++i)
                values[i] = values[i + 1] - values[i];
        values.resize(values.size() - static_cast<std::size_t>(n + 1));
        for (const ExactInt& v : values)
            c.expect(v == 0, [n = n] {
                return "vdim not a degree-" + std::to_string(n) + " polynomial in t";
            });
    }
}

}  // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out)
{
    struct Suite {
        const char* name;
        void (*fn)(Checker&, const VerifyOptions&);
    };
    const Suite suites[] = {
        {"polybinom identities", suite_polybinom},
        {"golden closed form", suite_golden_closed_form},
        {"golden recursion", suite_golden_recursion},
        {"golden large scale", suite_golden_large},
        {"recurrence grid", suite_recurrence_grid},
        {"closed form vs recursion", suite_closed_form_vs_recursion},
        {"single fat flat", suite_single_fat_flat},
        {"sandwich reports", suite_sandwich},
        {"bound properties", suite_bound_properties},
        {"veneroni transform", suite_veneroni},
        {"scan verdict tables", suite_scan_tables},
        {"polynomiality in t", suite_polynomiality},
    };
    int failed = 0;
    for (const Suite& s : suites) {
        Checker c;
        s.fn(c, opts);
        if (c.ok()) {
            out << "ok   " << s.name << " (" << c.checks() << " checks)\n";
        } else {
            ++failed;
            out << "FAIL " << s.name << ": " << c.failure() << "\n";
        }
    }
    return failed;
}

}  // namespace flatdim
