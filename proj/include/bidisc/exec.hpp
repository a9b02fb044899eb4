#pragma once

namespace bidisc {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path; `parallel` uses OpenMP and must produce bit-identical results.
enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel path will use.
int parallel_threads() noexcept;

}  // namespace bidisc
