#pragma once

namespace hermlift {

enum class Execution { Serial, Parallel };

/// Worker count for OpenMP kernels: the OpenMP default, capped by
/// HERMLIFT_THREADS when that is set to a positive integer.
int worker_count();

}  // namespace hermlift
