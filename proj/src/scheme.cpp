#include <flatdim/scheme.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flatdim {

FatFlatScheme::FatFlatScheme(int ambient_dim, std::vector<long long> multiplicities)
    : n_(ambient_dim), mults_(std::move(multiplicities))
{
    if (n_ < 2)
        throw std::invalid_argument("FatFlatScheme: ambient dimension must be >= 2");
    for (long long m : mults_)
        if (m < 0)
            throw std::invalid_argument("FatFlatScheme: multiplicities must be nonnegative");
    std::erase(mults_, 0);
    std::sort(mults_.begin(), mults_.end(), std::greater<>());
}

}  // namespace flatdim
