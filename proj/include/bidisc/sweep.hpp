#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bidisc/exec.hpp"
#include "bidisc/oracle.hpp"
#include "bidisc/solver.hpp"

namespace bidisc {

/// Real pole coordinates in CSV order: p1_re p1_im p2_re p2_im q1_re q1_im q2_re q2_im.
inline constexpr std::array<std::string_view, 8> kCoordNames = {
    "p1_re", "p1_im", "p2_re", "p2_im", "q1_re", "q1_im", "q2_re", "q2_im"};

inline constexpr std::string_view kSweepHeader =
    "i,j,p1_re,p1_im,p2_re,p2_im,q1_re,q1_im,q2_re,q2_im,region,value_log,residual_max,sandwich_width,note";

struct SweepAxis {
  int coord = 0;
  double lo = 0.0, hi = 0.0;
  int n = 2;

  double at(int k) const noexcept { return lo + (hi - lo) * k / (n - 1); }
};

/// A two-dimensional slice of pole space: axes x (index i) and y (index j) vary,
/// the remaining six coordinates hold the values in `fixed`.
struct SweepSpec {
  std::array<double, 8> fixed{};
  SweepAxis x{0}, y{1};
  BidiscPoint z{};
  SolverConfig solver{};
  bool oracle = false;
  OracleBudget budget{};

  /// Throws Error(InvalidArgument) on bad axes/resolution or fixed coordinates outside the disc.
  void validate() const;
};

int coord_index(std::string_view name);  ///< -1 if unknown

struct SweepRow {
  int i = 0, j = 0;
  std::array<double, 8> coords{};
  std::string region;
  double value_log = 0.0;  ///< NaN when no value
  double residual_max = 0.0;
  double sandwich_width = 0.0;  ///< NaN unless the oracle ran
  std::string note;
};

/// Rows in row-major (i outer, j inner) order regardless of execution policy.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, Exec exec = Exec::parallel);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace bidisc
