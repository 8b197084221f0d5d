#include <flatdim/veneroni.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace flatdim {

namespace {

bool system_valid(long long degree, const std::vector<long long>& mults)
{
    return degree >= 0 &&
           std::all_of(mults.begin(), mults.end(), [](long long m) { return m >= 0; });
}

}  // namespace

LinearSystem make_system(int ambient_dim, long long degree, std::vector<long long> multiplicities)
{
    if (ambient_dim < 2)
        throw std::invalid_argument("make_system: ambient dimension must be >= 2");
    LinearSystem sys;
    sys.ambient_dim = ambient_dim;
    sys.degree = degree;
    sys.multiplicities = std::move(multiplicities);
    sys.valid = system_valid(sys.degree, sys.multiplicities);
    return sys;
}

LinearSystem veneroni_pullback(const LinearSystem& sys)
{
    const long long n = sys.ambient_dim;
    if (static_cast<long long>(sys.multiplicities.size()) != n + 1)
        throw std::invalid_argument(
            "veneroni_pullback: the transform needs exactly n+1 multiplicities");
    const long long total =
        std::accumulate(sys.multiplicities.begin(), sys.multiplicities.end(), 0LL);
    LinearSystem out;
    out.ambient_dim = sys.ambient_dim;
    out.degree = n * sys.degree - (n - 1) * total;
    out.multiplicities.reserve(sys.multiplicities.size());
    for (long long m : sys.multiplicities)
        out.multiplicities.push_back(sys.degree - (total - m));
    out.valid = system_valid(out.degree, out.multiplicities);
    return out;
}

std::ostream& operator<<(std::ostream& os, const LinearSystem& sys)
{
    os << "{n=" << sys.ambient_dim << ", degree=" << sys.degree << ", mults=[";
    for (std::size_t i = 0; i < sys.multiplicities.size(); ++i) {
        if (i)
            os << ',';
        os << sys.multiplicities[i];
    }
    return os << "], " << (sys.valid ? "valid" : "invalid") << "}";
}

LinearSystem family_source(int ambient_dim, long long k)
{
    if (ambient_dim < 2)
        throw std::invalid_argument("family_source: ambient dimension must be >= 2");
    return make_system(ambient_dim, ambient_dim + k,
                       std::vector<long long>(static_cast<std::size_t>(ambient_dim) + 1, 1));
}

}  // namespace flatdim
