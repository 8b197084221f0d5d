#include <flatdim/bounds.hpp>

#include <flatdim/binom.hpp>
#include <flatdim/hilbert.hpp>

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace flatdim {

namespace {

using UKey = std::tuple<long long, long long, long long>;  // (n, s, t)

bool upper_base(long long n, long long s, long long t, ExactInt& out)
{
    if (t < 0) {
        out = 0;
        return true;
    }
    if (t == 0) {
        out = (s == 0) ? 1 : 0;
        return true;
    }
    if (s == 0) {
        out = polybinom(t + n, n);
        return true;
    }
    if (s == 1) {
        out = s_formula(n, 1, t);
        if (out < 0) out = 0;
        return true;
    }
    if (n == 2) {
        out = polybinom(t + 2, 2) - exact_of(s);
        if (out < 0) out = 0;
        return true;
    }
    if (n == 3) {
        out = s_formula(3, s, t);
        if (out < 0) out = 0;
        return true;
    }
    return false;
}

}  // namespace

ExactInt adim_upper_mult1(long long n, long long s, long long t)
{
    if (n < 2 || s < 0)
        throw std::invalid_argument("adim_upper_mult1: need n >= 2 and s >= 0");

    std::map<UKey, ExactInt> memo;
    struct Frame {
        long long n, s, t;
        bool expanded = false;
    };
    std::vector<Frame> stack{{n, s, t, false}};
    while (!stack.empty()) {
        Frame f = stack.back();
        if (memo.count({f.n, f.s, f.t})) {
            stack.pop_back();
            continue;
        }
        ExactInt base;
        if (upper_base(f.n, f.s, f.t, base)) {
            memo.emplace(UKey{f.n, f.s, f.t}, std::move(base));
            stack.pop_back();
            continue;
        }
        if (!f.expanded) {
            stack.back().expanded = true;
            if (!memo.count({f.n, f.s - 1, f.t - 1}))
                stack.push_back({f.n, f.s - 1, f.t - 1, false});
            if (!memo.count({f.n - 1, f.s - 1, f.t - 1}))
                stack.push_back({f.n - 1, f.s - 1, f.t - 1, false});
            continue;
        }
        ExactInt v = memo.at({f.n, f.s - 1, f.t - 1}) + memo.at({f.n - 1, f.s - 1, f.t - 1});
        memo.emplace(UKey{f.n, f.s, f.t}, std::move(v));
        stack.pop_back();
    }
    return memo.at({n, s, t});
}

bool lower_certificate(long long n, long long s, long long t)
{
    if (n < 2 || s < 0)
        throw std::invalid_argument("lower_certificate: need n >= 2 and s >= 0");
    const long long cap = cap_index(n, s);
    for (long long p = 1; p <= cap - 1; ++p)
        if (s_formula(n - 2 * p, s - p, t) <= 0)
            return false;
    return true;
}

bool family_conditions_check(long long n, long long k)
{
    if (n < 2)
        throw std::invalid_argument("family_conditions_check: need n >= 2");
    for (long long p = 0; p <= n / 2 - 1; ++p)
        if (s_formula(n - 2 * p, n + 1 - p, n + k) <= 0)
            return false;
    return true;
}

ExactInt adim_family(long long n, long long k)
{
    if (n < 3)
        throw std::invalid_argument("adim_family: need n >= 3");
    if (k < 3)
        throw std::invalid_argument("adim_family: need k >= 3");
    return s_formula(n, n + 1, n + k);
}

DimensionReport report_mult1(long long n, long long s, long long t)
{
    DimensionReport r;
    r.ambient_dim = n;
    r.count = s;
    r.degree = t;
    r.vdim = s_formula(n, s, t);
    r.adim_upper = adim_upper_mult1(n, s, t);
    r.lower_certified = lower_certificate(n, s, t);
    if (r.lower_certified && r.adim_upper == r.vdim && r.vdim > 0) {
        r.adim_exact = r.vdim;
        r.status = ReportStatus::ExactKnown;
    }
    return r;
}

}  // namespace flatdim
