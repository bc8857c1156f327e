#pragma once

namespace strongring {

// Number of threads the OpenMP kernels may use. Bounded by the
// STRONGRING_THREADS environment variable when set (>= 1).
int max_threads();

// Force a thread count programmatically (0 = back to environment/default).
void set_max_threads(int n);

} // namespace strongring
