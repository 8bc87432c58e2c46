#include "wradon/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace wradon {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WRADON_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), n);
    if (w == 1) {
        body(0, n);
        return;
    }
    // Many small chunks handed out in order keep threads balanced; results stay schedule independent
    // because each chunk writes only its own indices.
    const std::size_t chunk = std::max<std::size_t>(1, n / (w * 8));
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    std::vector<std::exception_ptr> errors(n_chunks);
    std::atomic_size_t next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::size_t b = c * chunk;
            const std::size_t e = std::min(n, b + chunk);
            try {
                body(b, e);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(w - 1);
    for (std::size_t t = 1; t < w; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace wradon
