#include "mfus/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mfus {

namespace {
std::atomic<int> g_workers{0};
thread_local bool t_inside = false;  // nested loops run inline
}

void set_workers(int n) { g_workers = std::max(0, n); }

int workers() {
    int w = g_workers.load();
    if (w > 0) return w;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int w = std::min(workers(), n);
    if (w <= 1 || t_inside) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&]() {
        t_inside = true;
        for (;;) {
            int i = next++;
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace mfus
