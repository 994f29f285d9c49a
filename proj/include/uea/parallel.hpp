#ifndef UEA_PARALLEL_HPP
#define UEA_PARALLEL_HPP

namespace uea {

/// Selects between the OpenMP kernels and the serial reference path.
/// Both produce identical results; the serial path is kept for testing
/// and for benchmarking the parallel one.
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace uea

#endif  // UEA_PARALLEL_HPP
