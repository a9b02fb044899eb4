#pragma once

#include "bidisc/types.hpp"

namespace bidisc {

inline constexpr double kPickTol = 1e-14;

/// Two-point Nevanlinna-Pick datum: node_i -> target_i.
struct PickDatum {
  DiscPoint node1, node2;
  DiscPoint target1, target2;

  PickDatum(DiscPoint n1, DiscPoint n2, DiscPoint t1, DiscPoint t2);
};

bool pick_solvable(const PickDatum& d) noexcept;

/// psi(z) = m_{target1}(eta * m_{node1}(z)). A Schur function whenever |eta| <= 1.
class PickInterpolant {
 public:
  PickInterpolant() = default;
  PickInterpolant(cplx node1, cplx target1, cplx eta) : node1_(node1), target1_(target1), eta_(eta) {}

  cplx operator()(cplx z) const noexcept;
  cplx node1() const noexcept { return node1_; }
  cplx target1() const noexcept { return target1_; }
  cplx eta() const noexcept { return eta_; }
  /// |eta| = 1 makes psi a degree-one Blaschke product.
  bool is_automorphism(double tol = 1e-12) const noexcept { return std::abs(std::abs(eta_) - 1.0) <= tol; }

 private:
  cplx node1_{}, target1_{}, eta_{};
};

/// Throws Error(NotSolvable) when the datum fails the Pick condition.
PickInterpolant pick_interpolant(const PickDatum& d);

}  // namespace bidisc
