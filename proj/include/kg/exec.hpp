#pragma once

namespace kg {

// Execution policy for the data-parallel kernels. Every parallel entry point
// has a plain serial twin used as the reference in tests and benchmarks;
// results are exact rationals, so the two must agree bit for bit.
enum class Exec { Serial, Parallel };

/// Worker count the parallel policy would use (1 without OpenMP).
int max_threads();

/// Applies the KGIBBS_THREADS environment override, if set and positive.
void apply_thread_env_override();

}  // namespace kg
