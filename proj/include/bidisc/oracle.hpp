#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bidisc/exec.hpp"
#include "bidisc/random.hpp"
#include "bidisc/types.hpp"

namespace bidisc {

struct OracleBudget {
  int t_grid = 33;
  int angle_grid = 64;
  int refine_steps = 20;
  int disc_starts = 128;
  std::uint64_t seed = kDefaultSeed;
  Exec exec = Exec::parallel;

  OracleBudget scaled(int factor) const;
};

/// Gate on the defining constraints before a witness value is admitted.
inline constexpr double kWitnessTol = 1e-8;

/// A one-sided bound and the family member that realizes it.
struct Bound {
  double value = 0.0;
  std::string family;
  std::vector<double> params;
  double residual = 0.0;
};

/// Lower bound for the Caratheodory function: max of log|G(0,0)| over explicit
/// functions G vanishing at both poles.
Bound cara_lower(const PolePair& pair, const OracleBudget& budget = {});

/// Upper bound for the Lempert function: min of log|z_p z_q| over explicit discs
/// through the origin hitting p at z_p and q at z_q. Throws Error(NoFeasibleDisc).
Bound lempert_upper(const PolePair& pair, const OracleBudget& budget = {});

struct Sandwich {
  Bound lower;
  Bound upper;

  double c_lower() const noexcept { return lower.value; }
  double l_upper() const noexcept { return upper.value; }
  double width() const noexcept { return upper.value - lower.value; }
  bool contains(double v, double tol = 1e-8) const noexcept {
    return v >= lower.value - tol && v <= upper.value + tol;
  }
};

Sandwich sandwich(const PolePair& pair, const OracleBudget& budget = {});

namespace oracle_detail {

/// The coordinate-Blaschke lower bound max(log|p1 q1|, log|p2 q2|).
Bound family_a_lower(const PolePair& pair);

/// The two-geodesic upper bound, in either coordinate order; value +inf when neither applies.
Bound family_a_upper(const PolePair& pair);

/// Best value of the rational-inner family at a fixed t, from the angle grid plus refinement.
struct FamilyCPoint {
  double t = 0.0;
  double theta_omega = 0.0;
  double theta_tau = 0.0;
  double value = -1e300;
  double residual = 1.0;
  bool feasible = false;
};

/// Coarse scan of family C over the t grid (kernel with serial and OpenMP paths).
std::vector<FamilyCPoint> family_c_scan(const PolePair& pair, const OracleBudget& budget, Exec exec);

/// Feasible endpoints of the three-extremal disc family from the multistart sequence.
struct FamilyBPoint {
  double theta = 0.0;
  cplx z_p{}, z_q{};
  cplx b{};        // zero of the second coordinate
  int branch = 0;  // root choice for (z_p, z_q): bit 0 for z_p, bit 1 for z_q
  double value = 1e300;
  double residual = 1.0;
  bool feasible = false;
};

std::vector<FamilyBPoint> family_b_starts(const PolePair& pair, const OracleBudget& budget, Exec exec);

}  // namespace oracle_detail

}  // namespace bidisc
