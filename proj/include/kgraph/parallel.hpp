#ifndef KGRAPH_PARALLEL_HPP
#define KGRAPH_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace kgraph {

// Worker count: KGRAPH_THREADS caps it, hardware concurrency is the default.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("KGRAPH_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Runs f(i) for i in [0, n). Each index writes only its own slot in any
// output vector, so the merge is deterministic regardless of scheduling.
template <class F>
void parallel_for(std::size_t n, F f) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) f(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace kgraph

#endif
