#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace slift {

/// Worker cap shared by the whole process. Set from the CLI --threads flag
/// or SLIFT_THREADS; results never depend on it (see pairwise_sum).
int thread_cap();
void set_thread_cap(int n);

namespace detail {
inline int& thread_cap_storage() {
    static int cap = [] {
        if (const char* env = std::getenv("SLIFT_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
    }();
    return cap;
}
}  // namespace detail

inline int thread_cap() { return detail::thread_cap_storage(); }
inline void set_thread_cap(int n) { detail::thread_cap_storage() = std::max(1, n); }

/// Fixed-tree pairwise sum: the reduction order depends only on the length,
/// so float results are identical across runs and thread counts.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// Evaluates fn(i) for i in [0, n) into a vector, possibly on several
/// threads. Output slot i always holds fn(i), so downstream reductions
/// are deterministic.
template <class T, class Fn>
std::vector<T> indexed_map(size_t n, Fn&& fn) {
    std::vector<T> out(n);
    int workers = std::min<long long>(thread_cap(), static_cast<long long>(n));
    if (workers <= 1 || n < 256) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    size_t chunk = (n + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        size_t lo = static_cast<size_t>(w) * chunk;
        size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace slift
