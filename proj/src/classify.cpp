#include <flatdim/classify.hpp>

#include <flatdim/bounds.hpp>

#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace flatdim {

Verdict verdict_of(const ExactInt& adim, const ExactInt& vdim)
{
    if (adim == 0)
        return Verdict::NoForms;
    if (adim > vdim)
        return Verdict::Unexpected;
    if (vdim > adim)
        return Verdict::MissingExpected;
    return Verdict::Equal;
}

ClassificationRecord classify_family(long long n, long long k, VdimMemo& memo)
{
    if (n < 3 || k < 3)
        throw std::invalid_argument("classify_family: need n >= 3 and k >= 3");
    if (n > std::numeric_limits<int>::max())
        throw std::invalid_argument("classify_family: n out of range");
    ClassificationRecord rec;
    rec.n = n;
    rec.k = k;
    rec.deg_source = n + k;
    rec.deg_target = k * n + 1;
    rec.adim = adim_family(n, k);
    const FatFlatScheme target(static_cast<int>(n),
                               std::vector<long long>(static_cast<std::size_t>(n) + 1, k));
    rec.vdim = vdim_recursive(target, rec.deg_target, memo);
    rec.verdict = verdict_of(rec.adim, rec.vdim);
    return rec;
}

ClassificationRecord classify_family(long long n, long long k)
{
    VdimMemo memo;
    return classify_family(n, k, memo);
}

std::vector<ClassificationRecord> scan(long long k, long long n_min, long long n_max, int jobs)
{
    if (k < 3)
        throw std::invalid_argument("scan: need k >= 3");
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("scan: need 3 <= n_min <= n_max");
    if (jobs < 1)
        throw std::invalid_argument("scan: need jobs >= 1");

    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<ClassificationRecord> out(count);
    if (jobs == 1) {
        VdimMemo memo;
        for (std::size_t i = 0; i < count; ++i)
            out[i] = classify_family(n_min + static_cast<long long>(i), k, memo);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        VdimMemo memo;  // private per worker; results do not depend on sharing
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                out[i] = classify_family(n_min + static_cast<long long>(i), k, memo);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const int nthreads = static_cast<int>(std::min<std::size_t>(jobs, count));
    threads.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i)
        threads.emplace_back(worker);
    for (auto& th : threads)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

}  // namespace flatdim
