#pragma once

namespace motsteen {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path is kept for testing and benchmarks.
enum class Execution { serial, parallel };

/// Sets the OpenMP thread count when > 0. No-op without OpenMP.
void set_thread_count(int threads);

}  // namespace motsteen
