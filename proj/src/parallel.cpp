#include "dissipator/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace dissipator {

namespace {
std::atomic<int> g_default_threads{0};

int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}
}  // namespace

void set_default_threads(int n) { g_default_threads.store(n < 0 ? 0 : n); }

int thread_count(int requested) {
    if (requested > 0) return requested;
    int d = g_default_threads.load();
    if (d > 0) return d;
    if (const char* env = std::getenv("DISSIPATOR_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return hardware_threads();
}

}  // namespace dissipator
