#pragma once

namespace catalysis {

/// Kernels come in two flavours: a plain loop kept as the reference and an
/// OpenMP loop. Both must produce identical results.
enum class Execution { Serial, Parallel };

}  // namespace catalysis
