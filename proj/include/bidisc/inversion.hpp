#pragma once

#include <cstdint>
#include <optional>

#include "bidisc/exec.hpp"
#include "bidisc/extremal.hpp"
#include "bidisc/random.hpp"

namespace bidisc {

/// Damped least-squares settings for inverting big_phi on 8 real unknowns
/// (alpha, beta, c as real pairs, the angle of omega, t).
struct InversionConfig {
  int starts = 64;
  int max_iterations = 200;
  double accept_residual = 1e-12;
  double initial_damping = 1e-3;
  double start_radius = 0.95;
  double t_lo = 0.05, t_hi = 0.95;
  /// Iterates are projected onto moduli <= this bound.
  double modulus_clamp = 0.999999;
  /// Starts evaluated concurrently per batch on the parallel path.
  int batch = 8;
};

struct InversionResult {
  ExtremalParams params;  ///< canonicalized
  double residual = 0.0;  ///< sup-norm of big_phi(params) - target
  int start_index = -1;   ///< lowest-index converging start
  int starts_run = 0;
  long iterations = 0;
};

/// Outcome of a single damped least-squares run from a given start.
struct LocalRun {
  ExtremalParams params;
  double residual;
  int iterations;
  bool converged;
};

/// One damped least-squares run from `start` towards `target`.
LocalRun invert_from(const PolePair& target, const ExtremalParams& start, const InversionConfig& cfg);

/// Deterministic start number `index` of the multistart sequence for `seed`.
ExtremalParams multistart_point(std::uint64_t seed, int index, const InversionConfig& cfg);

/// Multistart inversion. The serial and parallel paths select the same start
/// (the lowest index that converges) and return identical results.
std::optional<InversionResult> invert_big_phi(const PolePair& target, std::uint64_t seed,
                                              const InversionConfig& cfg, Exec exec = Exec::parallel);

}  // namespace bidisc
