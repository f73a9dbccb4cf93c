#include "annularkh/parallel.hpp"

#include <cstdlib>
#include <string>

namespace annularkh {
namespace {

std::size_t initial_threads() {
    if (const char* env = std::getenv("ANNULARKH_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::atomic<std::size_t> g_threads{0};

}  // namespace

std::size_t default_thread_count() {
    std::size_t t = g_threads.load(std::memory_order_relaxed);
    if (t == 0) {
        t = initial_threads();
        g_threads.store(t, std::memory_order_relaxed);
    }
    return t;
}

void set_default_thread_count(std::size_t threads) { g_threads.store(threads == 0 ? 1 : threads); }

}  // namespace annularkh
