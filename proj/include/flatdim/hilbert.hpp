#pragma once

#include <flatdim/binom.hpp>
#include <flatdim/exact.hpp>
#include <flatdim/scheme.hpp>

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace flatdim {

// N(n,s) = min(floor(n/2), s): index of the last inclusion-exclusion term
// for s codimension-2 flats of P^n (an i-fold intersection has codimension
// 2i while 2i <= n, and there are no deeper ones). Accepts n >= 0: for
// n <= 1 the sum degenerates to the single i = 0 term, which is the
// extension the recurrence grid at n = 2 needs.
long long cap_index(long long n, long long s);

// Closed-form virtual dimension for multiplicity-1 schemes:
//
//   S(n,s,t) = sum_{i=0}^{N(n,s)} (-1)^i C(s,i) polybinom(t+n-2i, n-2i).
//
// Polynomial in t, so every integer t is legal. n >= 0, s >= 0.
ExactInt s_formula(long long n, long long s, long long t);

// Number of linearly independent conditions that vanishing to order >= m
// along one codimension-k linear subspace of P^n imposes on forms of
// degree t:
//
//   c(n,k,m,t) = sum_{i=0}^{m-1} C(i+k-1, k-1) polybinom(t-i+n-k, n-k).
//
// Hilbert-polynomial semantics in t (the count equals the Hilbert function
// only for t >= m). Requires n >= 2, 1 <= k <= n, m >= 1.
ExactInt conditions_fat_flat(long long n, long long k, long long m, long long t);

// Memo for vdim_recursive, keyed by (ambient dimension, canonical
// multiplicity multiset, degree). A hit returns exactly the value that
// recomputation would produce. Not internally synchronized: either guard a
// shared memo externally or give each worker its own; results are
// identical either way.
class VdimMemo {
public:
    struct Key {
        int n;
        long long t;
        std::vector<long long> mults;  // non-increasing
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    const ExactInt* find(const Key& key) const
    {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    void store(const Key& key, ExactInt value) { map_.emplace(key, std::move(value)); }
    std::size_t size() const noexcept { return map_.size(); }
    void clear() noexcept { map_.clear(); }

private:
    std::unordered_map<Key, ExactInt, KeyHash> map_;
};

// Virtual dimension vdim_n(X, t) of the system of degree-t forms through
// the fat-flat scheme X, via residual/trace peeling of the flat with the
// smallest multiplicity m:
//
//   vdim_n(..., m, t) = vdim_n(..., m-1, t-1) + vdim_{n-1}(..., t-m)
//
// with bases vdim_n(empty, t) = polybinom(t+n, n) and
// vdim_2(m_1..m_s, t)  = polybinom(t+2, 2) - sum_i C(m_i+1, 2).
// Negative degrees reached by the recursion are evaluated polynomially.
ExactInt vdim_recursive(const FatFlatScheme& scheme, long long t, VdimMemo& memo);

// Same, using a mutex-guarded process-wide memo.
ExactInt vdim_recursive(const FatFlatScheme& scheme, long long t);

// Hilbert polynomial of the scheme at t: polybinom(t+n, n) - vdim_n(X, t).
ExactInt hilbert_poly_value(const FatFlatScheme& scheme, long long t);

}  // namespace flatdim
