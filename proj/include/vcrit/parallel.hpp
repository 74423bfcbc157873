#pragma once

// Tiny bounded work-sharing helper.  parallel_for farms [begin, end) out to
// worker threads grabbing indices from an atomic counter; nested calls run
// inline so callers never oversubscribe.  Writers must target per-index
// slots, which keeps every user of this header deterministic.

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace vcrit {

namespace detail {
inline std::atomic<int>& thread_setting() {
    static std::atomic<int> t{0};  // 0 = use hardware parallelism
    return t;
}
inline thread_local bool inside_parallel_region = false;
}  // namespace detail

inline int hardware_parallelism() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// threads <= 0 restores the default (hardware parallelism).
inline void set_parallelism(int threads) { detail::thread_setting() = threads; }

inline int parallelism() {
    const int t = detail::thread_setting();
    return t > 0 ? t : hardware_parallelism();
}

template <class F>
void parallel_for(int begin, int end, F f) {
    const int len = end - begin;
    if (len <= 0) return;
    int t = std::min(parallelism(), len);
    if (t <= 1 || detail::inside_parallel_region) {
        for (int i = begin; i < end; ++i) f(i);
        return;
    }

    std::atomic<int> next{begin};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&]() {
        detail::inside_parallel_region = true;
        try {
            for (int i = next++; i < end; i = next++) f(i);
        } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
        }
        detail::inside_parallel_region = false;
    };

    std::vector<std::thread> pool;
    pool.reserve(t - 1);
    for (int i = 0; i < t - 1; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failed) std::rethrow_exception(error);
}

}  // namespace vcrit
