#pragma once

// Thin OpenMP shims so callers can pin thread counts in tests and benchmarks.
// Builds without OpenMP degrade to a single thread.

namespace ballotrank {

int max_threads();
void set_threads(int n);  // clamped to >= 1; no-op without OpenMP

}  // namespace ballotrank
