#pragma once

#include <vector>

#include "bidisc/types.hpp"

namespace bidisc {

/// Idempotent disc automorphism m_a(z) = (a - z) / (1 - conj(a) z).
/// Swaps 0 and a; m_a(m_a(z)) = z. Requires |a| < 1 and |z| <= 1.
inline cplx mobius_map(cplx a, cplx z) noexcept { return (a - z) / (1.0 - std::conj(a) * z); }

/// Pseudohyperbolic distance |(x - y) / (1 - conj(x) y)|.
inline double mobius_dist(cplx x, cplx y) noexcept { return std::abs((x - y) / (1.0 - std::conj(x) * y)); }

/// Finite Blaschke product rotation * prod_i m_{zero_i}(z).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  BlaschkeProduct(std::vector<DiscPoint> zeros, Unimodular rotation)
      : zeros_(std::move(zeros)), rotation_(rotation) {}

  cplx operator()(cplx z) const noexcept;
  std::size_t degree() const noexcept { return zeros_.size(); }
  const std::vector<DiscPoint>& zeros() const noexcept { return zeros_; }
  Unimodular rotation() const noexcept { return rotation_; }

 private:
  std::vector<DiscPoint> zeros_;
  Unimodular rotation_;
};

inline cplx blaschke_eval(const BlaschkeProduct& b, cplx z) noexcept { return b(z); }

/// Coordinatewise (m_{z1}(x1), m_{z2}(x2)); sends z to the origin and is an involution.
inline BidiscPoint automorphism_normalize(const BidiscPoint& z, const BidiscPoint& x) noexcept {
  return {mobius_map(z.x1, x.x1), mobius_map(z.x2, x.x2)};
}

}  // namespace bidisc
