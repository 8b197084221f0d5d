#include <flatdim/oracle.hpp>

#include <flatdim/binom.hpp>
#include <flatdim/hilbert.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace flatdim {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr long long kMaxColumns = 5000;
constexpr int kMinAmbient = 2;
constexpr int kMaxAmbient = 5;
constexpr long long kMaxDegree = 10;
constexpr long long kMaxMultiplicity = 4;

// All exponent vectors over `nvars` variables of total degree exactly
// `total`, in a fixed lexicographic order (first variable's exponent
// decreasing).
void exponents_rec(int nvars, long long total, std::vector<long long>& cur,
                   std::vector<std::vector<long long>>& out)
{
    if (nvars == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long long e = total; e >= 0; --e) {
        cur.push_back(e);
        exponents_rec(nvars - 1, total - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> exponents(int nvars, long long total)
{
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    exponents_rec(nvars, total, cur, out);
    return out;
}

// Incremental rank of a streamed row set over F_p. Pivot rows are kept
// normalized (leading 1) and each is reduced against all earlier pivots at
// insertion, so reducing a new row against pivots in insertion order
// zeroes it at every pivot column.
class RankAccumulator {
public:
    RankAccumulator(std::size_t cols, const modp::RowOps& ops) : cols_(cols), ops_(ops) {}

    std::size_t rank() const noexcept { return pivots_.size(); }
    bool saturated() const noexcept { return pivots_.size() == cols_; }

    void add_row(std::vector<u32>& row)
    {
        if (saturated())
            return;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const u32 f = row[pivot_cols_[i]];
            if (f != 0)
                ops_.axpy(row.data(), pivots_[i].data(), ops_.prime() - f, cols_);
        }
        const auto lead = std::find_if(row.begin(), row.end(), [](u32 v) { return v != 0; });
        if (lead == row.end())
            return;
        const std::size_t col = static_cast<std::size_t>(lead - row.begin());
        ops_.scale(row.data(), modp::invmod(*lead, ops_.prime()), cols_);
        pivot_cols_.push_back(col);
        pivots_.push_back(row);
    }

private:
    std::size_t cols_;
    const modp::RowOps& ops_;
    std::vector<std::vector<u32>> pivots_;
    std::vector<std::size_t> pivot_cols_;
};

struct FlatBasis {
    // spanning vectors of the flat (nullspace of its two linear forms)
    std::vector<std::vector<u32>> basis;
};

u32 draw(std::mt19937_64& rng, u32 p)
{
    return static_cast<u32>(rng() % p);
}

// Nullspace basis of a 2 x nvars matrix of full rank 2 over F_p; empty
// result means the two forms were dependent and the caller must redraw.
std::vector<std::vector<u32>> nullspace2(std::vector<std::vector<u32>> m, u32 p,
                                         const modp::RowOps& ops)
{
    const std::size_t nvars = m[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nvars && rank < 2; ++col) {
        std::size_t r = rank;
        while (r < 2 && m[r][col] == 0)
            ++r;
        if (r == 2)
            continue;
        std::swap(m[r], m[rank]);
        ops.scale(m[rank].data(), modp::invmod(m[rank][col], p), nvars);
        for (std::size_t other = 0; other < 2; ++other) {
            if (other == rank || m[other][col] == 0)
                continue;
            ops.axpy(m[other].data(), m[rank].data(), p - m[other][col], nvars);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank < 2)
        return {};
    std::vector<std::vector<u32>> basis;
    for (std::size_t f = 0; f < nvars; ++f) {
        if (f == pivot_cols[0] || f == pivot_cols[1])
            continue;
        std::vector<u32> v(nvars, 0);
        v[f] = 1;
        v[pivot_cols[0]] = (p - m[0][f]) % p;
        v[pivot_cols[1]] = (p - m[1][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

FlatBasis sample_flat(std::mt19937_64& rng, int nvars, u32 p, const modp::RowOps& ops)
{
    for (;;) {
        std::vector<std::vector<u32>> forms(2, std::vector<u32>(nvars));
        for (auto& form : forms)
            for (auto& coeff : form)
                coeff = draw(rng, p);
        auto basis = nullspace2(forms, p, ops);
        if (!basis.empty())
            return {std::move(basis)};
    }
}

std::vector<u32> sample_point(std::mt19937_64& rng, const FlatBasis& flat, u32 p)
{
    const std::size_t nvars = flat.basis[0].size();
    for (;;) {
        std::vector<u32> pt(nvars, 0);
        for (const auto& b : flat.basis) {
            const u64 c = draw(rng, p);
            for (std::size_t j = 0; j < nvars; ++j)
                pt[j] = static_cast<u32>((pt[j] + c * b[j]) % p);
        }
        if (std::any_of(pt.begin(), pt.end(), [](u32 v) { return v != 0; }))
            return pt;
    }
}

// b (b-1) ... (b-a+1) mod p for small nonnegative b >= a
u32 falling_mod(long long b, long long a, u32 p)
{
    u64 r = 1;
    for (long long j = 0; j < a; ++j)
        r = (r * static_cast<u64>(b - j)) % p;
    return static_cast<u32>(r);
}

}  // namespace

ExactInt adim_rank_oracle(int n, const std::vector<long long>& multiplicities, long long t,
                          const OracleConfig& cfg)
{
    if (n < kMinAmbient || n > kMaxAmbient)
        throw std::invalid_argument("adim_rank_oracle: ambient dimension limited to 2..5");
    if (t < 0 || t > kMaxDegree)
        throw std::invalid_argument("adim_rank_oracle: degree limited to 0..10");
    std::vector<long long> mults;
    for (long long m : multiplicities) {
        if (m < 0 || m > kMaxMultiplicity)
            throw std::invalid_argument("adim_rank_oracle: multiplicities limited to 0..4");
        if (m > 0)
            mults.push_back(m);  // input order kept: extending the list keeps the prefix
    }
    if (cfg.samples_per_flat < 1)
        throw std::invalid_argument("adim_rank_oracle: samples_per_flat must be >= 1");

    const ExactInt cols_exact = polybinom(t + n, n);
    if (cols_exact > exact_of(kMaxColumns))
        throw std::invalid_argument("adim_rank_oracle: monomial count exceeds desk scale (5000)");
    const long long cols = cols_exact.get_si();
    const int nvars = n + 1;

    // Planned row counts per flat: enough points that the row space covers
    // the flat's condition space with the configured safety factor.
    std::vector<long long> rows_per_point(mults.size()), points_per_flat(mults.size());
    long long total_rows = 0;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        const long long m = mults[i];
        long long rpp = 0;
        for (long long o = 0; o < m; ++o)
            rpp += polybinom(o + n, n).get_si();
        ExactInt cond = conditions_fat_flat(n, 2, m, t);
        if (cond < 1)
            cond = 1;
        if (cond > exact_of(cols))
            cond = exact_of(cols);
        const long long by_conditions = cfg.samples_per_flat * cond.get_si();
        const long long by_columns = (cfg.samples_per_flat * cols + rpp - 1) / rpp;
        rows_per_point[i] = rpp;
        points_per_flat[i] = std::max(1LL, std::min(by_conditions, by_columns));
        total_rows += points_per_flat[i] * rpp;
    }

    const u32 p = cfg.prime;
    if (p > modp::kMersenne31)
        throw std::invalid_argument("adim_rank_oracle: prime must be < 2^31");
    {
        ExactInt pz = static_cast<unsigned long>(p);
        if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
            throw std::invalid_argument("adim_rank_oracle: modulus is not prime");
    }
    if (static_cast<long long>(p) <= std::max(total_rows, cols))
        throw std::invalid_argument("adim_rank_oracle: prime must exceed the matrix dimensions");

    const modp::RowOps ops(p);
    std::mt19937_64 rng(cfg.seed);
    const auto monomials = exponents(nvars, t);
    RankAccumulator elim(static_cast<std::size_t>(cols), ops);

    std::vector<u32> row(static_cast<std::size_t>(cols));
    for (std::size_t fi = 0; fi < mults.size(); ++fi) {
        const long long m = mults[fi];
        const FlatBasis flat = sample_flat(rng, nvars, p, ops);
        std::vector<std::vector<long long>> ops_orders;  // all |alpha| < m
        for (long long o = 0; o < m; ++o)
            for (auto& alpha : exponents(nvars, o))
                ops_orders.push_back(std::move(alpha));
        for (long long pt_i = 0; pt_i < points_per_flat[fi]; ++pt_i) {
            const std::vector<u32> q = sample_point(rng, flat, p);
            // powers q_j^e for e <= t
            std::vector<std::vector<u32>> pw(nvars, std::vector<u32>(t + 1));
            for (int j = 0; j < nvars; ++j) {
                pw[j][0] = 1;
                for (long long e = 1; e <= t; ++e)
                    pw[j][e] = modp::mulmod(pw[j][e - 1], q[j], p);
            }
            for (const auto& alpha : ops_orders) {
                for (std::size_t col = 0; col < monomials.size(); ++col) {
                    const auto& beta = monomials[col];
                    u64 v = 1;
                    for (int j = 0; j < nvars && v != 0; ++j) {
                        if (beta[j] < alpha[j]) {
                            v = 0;
                            break;
                        }
                        v = (v * falling_mod(beta[j], alpha[j], p)) % p;
                        v = (v * pw[j][beta[j] - alpha[j]]) % p;
                    }
                    row[col] = static_cast<u32>(v);
                }
                elim.add_row(row);
                if (elim.saturated())
                    return 0;
            }
        }
    }
    return exact_of(cols - static_cast<long long>(elim.rank()));
}

}  // namespace flatdim
