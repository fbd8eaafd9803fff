#ifndef GENLAMBDA_UTIL_HPP
#define GENLAMBDA_UTIL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace genlambda {

// Deterministic splitmix64 generator. std::mt19937 would do, but the
// standard distributions are implementation-defined; reports must be
// byte-identical across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n == 0");
        std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
// written to pre-sized slots indexed by i so that aggregation order is
// deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<std::size_t> counter{0};
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        threads.emplace_back([&]() {
            for (;;) {
                std::size_t i = counter.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    break;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

// least non-negative residue
inline long mod_pos(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

// inverse of a mod n; throws if gcd(a, n) != 1
inline long inv_mod(long a, long n) {
    long t = 0, newt = 1, r = n, newr = mod_pos(a, n);
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_pos(t, n);
}

}  // namespace genlambda

#endif
