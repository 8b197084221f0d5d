#pragma once

#include <vector>

namespace flatdim {

// A scheme X = m_1 P_1 + ... + m_s P_s of general codimension-2 linear
// subspaces ("flats") of P^n, each taken with a positive multiplicity.
// The flats themselves carry no coordinates; generality is an assumption,
// so the scheme is just (n, multiset of multiplicities).
//
// Multiplicities are stored sorted in non-increasing order: equal multisets
// compare equal no matter the input order. Zeros are dropped on
// construction; negative multiplicities and n < 2 are rejected.
class FatFlatScheme {
public:
    FatFlatScheme(int ambient_dim, std::vector<long long> multiplicities);

    int ambient_dim() const noexcept { return n_; }
    const std::vector<long long>& multiplicities() const noexcept { return mults_; }
    long long flat_count() const noexcept { return static_cast<long long>(mults_.size()); }

    friend bool operator==(const FatFlatScheme&, const FatFlatScheme&) = default;

private:
    int n_;
    std::vector<long long> mults_;
};

}  // namespace flatdim
