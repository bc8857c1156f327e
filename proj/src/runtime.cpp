#include "strongring/runtime.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strongring {

namespace {
std::atomic<int> forced{0};

int env_threads() {
    if (const char* s = std::getenv("STRONGRING_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}
} // namespace

int max_threads() {
    int f = forced.load(std::memory_order_relaxed);
    if (f >= 1) return f;
    static const int from_env = env_threads();
    return from_env;
}

void set_max_threads(int n) { forced.store(n, std::memory_order_relaxed); }

} // namespace strongring
