#include "bidisc/mobius.hpp"

#include <omp.h>

#include "bidisc/error.hpp"
#include "bidisc/exec.hpp"

namespace bidisc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPoint: return "INVALID_POINT";
    case ErrorCode::NotSolvable: return "NOT_SOLVABLE";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::DiagonalOutput: return "DIAGONAL_OUTPUT";
    case ErrorCode::DiagonalPoles: return "DIAGONAL_POLES";
    case ErrorCode::PoleAtBase: return "POLE_AT_BASE";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::NoCandidate: return "NO_CANDIDATE";
    case ErrorCode::NoFeasibleDisc: return "NO_FEASIBLE_DISC";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

int parallel_threads() noexcept { return omp_get_max_threads(); }

cplx BlaschkeProduct::operator()(cplx z) const noexcept {
  cplx acc = rotation_.value();
  for (const auto& a : zeros_) acc *= mobius_map(a, z);
  return acc;
}

}  // namespace bidisc
