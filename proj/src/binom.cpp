#include <flatdim/binom.hpp>

#include <stdexcept>

namespace flatdim {

ExactInt polybinom(long long x, long long m)
{
    if (m < 0)
        throw std::invalid_argument("polybinom: lower index must be nonnegative");
    if (x >= 0 && x < m)
        return 0;  // the falling factorial contains the factor 0
    ExactInt acc = 1;
    ExactInt factor = exact_of(x);
    // Divide by j right after multiplying the j-th factor: any j consecutive
    // integers are divisible by j!, so the division is exact at every step
    // and intermediates stay as small as the result.
    for (long long j = 1; j <= m; ++j) {
        acc *= factor;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
        --factor;
    }
    return acc;
}

}  // namespace flatdim
