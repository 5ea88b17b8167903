#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shellflow {

/// Run fn(i) for i in [0, n), contiguously partitioned over n_threads.
/// Work items must write to disjoint locations; the partitioning is
/// deterministic, so results are bitwise independent of n_threads.
template <class F>
void parallel_for(int n, int n_threads, F&& fn) {
    if (n_threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int nt = std::min(n_threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::exception_ptr err;
    std::mutex err_mtx;
    for (int t = 0; t < nt; ++t) {
        const int lo = static_cast<int>(static_cast<long long>(n) * t / nt);
        const int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / nt);
        pool.emplace_back([lo, hi, &fn, &err, &err_mtx] {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mtx);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace shellflow
