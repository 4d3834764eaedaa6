#pragma once

namespace dissipator {

/// Effective worker count for the OpenMP kernels.
/// Resolution order: explicit request > DISSIPATOR_THREADS env > logical cores.
/// `requested <= 0` means "use the default".
int thread_count(int requested = 0);

/// Set the process-wide default used when a kernel is called with threads <= 0.
/// Pass 0 to fall back to env / hardware detection.
void set_default_threads(int n);

}  // namespace dissipator
