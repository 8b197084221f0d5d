#include <flatdim/hilbert.hpp>

#include <mutex>
#include <stdexcept>
#include <utility>

namespace flatdim {

long long cap_index(long long n, long long s)
{
    if (n < 0 || s < 0)
        throw std::invalid_argument("cap_index: need n >= 0 and s >= 0");
    return std::min(n / 2, s);
}

ExactInt s_formula(long long n, long long s, long long t)
{
    const long long cap = cap_index(n, s);
    ExactInt acc = 0;
    for (long long i = 0; i <= cap; ++i) {
        ExactInt term = polybinom(s, i) * polybinom(t + n - 2 * i, n - 2 * i);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

ExactInt conditions_fat_flat(long long n, long long k, long long m, long long t)
{
    if (n < 2)
        throw std::invalid_argument("conditions_fat_flat: need n >= 2");
    if (k < 1 || k > n)
        throw std::invalid_argument("conditions_fat_flat: codimension must be in 1..n");
    if (m < 1)
        throw std::invalid_argument("conditions_fat_flat: multiplicity must be >= 1");
    ExactInt acc = 0;
    for (long long i = 0; i < m; ++i)
        acc += polybinom(i + k - 1, k - 1) * polybinom(t - i + n - k, n - k);
    return acc;
}

std::size_t VdimMemo::KeyHash::operator()(const Key& k) const noexcept
{
    // FNV-1a over the key words
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(k.n));
    mix(static_cast<std::uint64_t>(k.t));
    for (long long m : k.mults)
        mix(static_cast<std::uint64_t>(m));
    return static_cast<std::size_t>(h);
}

namespace {

using Key = VdimMemo::Key;

bool is_base(const Key& k) { return k.mults.empty() || k.n == 2; }

ExactInt base_value(const Key& k)
{
    if (k.mults.empty())
        return polybinom(k.t + k.n, k.n);
    // n == 2: points in the plane, C(m+1, 2) conditions each
    ExactInt v = polybinom(k.t + 2, 2);
    for (long long m : k.mults)
        v -= polybinom(m + 1, 2);
    return v;
}

// Residual: decrement the minimal multiplicity (dropping it at zero), t-1.
Key residual_key(const Key& k)
{
    Key r{k.n, k.t - 1, k.mults};
    if (r.mults.back() == 1)
        r.mults.pop_back();
    else
        --r.mults.back();
    return r;
}

// Trace minus its fixed component: drop the peeled flat, pass to a
// hyperplane (n-1), degree t - m.
Key trace_key(const Key& k)
{
    Key r{k.n - 1, k.t - k.mults.back(), k.mults};
    r.mults.pop_back();
    return r;
}

}  // namespace

ExactInt vdim_recursive(const FatFlatScheme& scheme, long long t, VdimMemo& memo)
{
    const Key root{scheme.ambient_dim(), t, scheme.multiplicities()};
    if (const ExactInt* hit = memo.find(root))
        return *hit;

    struct Frame {
        Key key;
        Key left, right;
        bool expanded = false;
    };
    std::vector<Frame> stack;
    stack.push_back({root, {}, {}, false});
    while (!stack.empty()) {
        if (memo.find(stack.back().key)) {
            stack.pop_back();
            continue;
        }
        if (is_base(stack.back().key)) {
            const Key& k = stack.back().key;
            memo.store(k, base_value(k));
            stack.pop_back();
            continue;
        }
        if (!stack.back().expanded) {
            Frame& f = stack.back();
            f.left = residual_key(f.key);
            f.right = trace_key(f.key);
            f.expanded = true;
            Key l = f.left, r = f.right;  // copies: the pushes invalidate f
            if (!memo.find(r))
                stack.push_back({std::move(r), {}, {}, false});
            if (!memo.find(l))
                stack.push_back({std::move(l), {}, {}, false});
            continue;
        }
        const Frame& f = stack.back();
        ExactInt v = *memo.find(f.left) + *memo.find(f.right);
        memo.store(f.key, std::move(v));
        stack.pop_back();
    }
    return *memo.find(root);
}

ExactInt vdim_recursive(const FatFlatScheme& scheme, long long t)
{
    static VdimMemo memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return vdim_recursive(scheme, t, memo);
}

ExactInt hilbert_poly_value(const FatFlatScheme& scheme, long long t)
{
    return polybinom(t + scheme.ambient_dim(), scheme.ambient_dim()) -
           vdim_recursive(scheme, t);
}

}  // namespace flatdim
