#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "bidisc/error.hpp"

namespace bidisc {

using cplx = std::complex<double>;

/// Points with modulus at or above this bound are rejected as not in the open disc.
inline constexpr double kDiscBound = 1.0 - 1e-15;
inline constexpr double kUnimodularTol = 1e-14;

/// A point of the open unit disc.
class DiscPoint {
 public:
  DiscPoint() = default;
  explicit DiscPoint(cplx v) : value_(v) {
    if (!(std::abs(v) < kDiscBound)) throw Error(ErrorCode::InvalidPoint, "disc point has modulus >= 1");
  }
  explicit DiscPoint(double re, double im = 0.0) : DiscPoint(cplx(re, im)) {}

  cplx value() const noexcept { return value_; }
  operator cplx() const noexcept { return value_; }

 private:
  cplx value_{0.0, 0.0};
};

/// A point of the unit circle.
class Unimodular {
 public:
  Unimodular() = default;
  explicit Unimodular(cplx v) : value_(v) {
    if (!(std::abs(std::abs(v) - 1.0) <= kUnimodularTol))
      throw Error(ErrorCode::InvalidArgument, "scalar is not unimodular");
  }
  static Unimodular from_angle(double theta) { return Unimodular(std::polar(1.0, theta)); }

  cplx value() const noexcept { return value_; }
  operator cplx() const noexcept { return value_; }

 private:
  cplx value_{1.0, 0.0};
};

struct BidiscPoint {
  cplx x1{};
  cplx x2{};

  friend bool operator==(const BidiscPoint&, const BidiscPoint&) = default;
};

inline bool in_bidisc(const BidiscPoint& x) noexcept {
  return std::abs(x.x1) < kDiscBound && std::abs(x.x2) < kDiscBound;
}

inline void require_in_bidisc(const BidiscPoint& x, const char* what) {
  if (!in_bidisc(x)) throw Error(ErrorCode::InvalidPoint, std::string(what) + " is not in the bidisc");
}

/// Sup-norm distance on C^2.
inline double sup_dist(const BidiscPoint& a, const BidiscPoint& b) noexcept {
  return std::max(std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2));
}

/// Ordered pair of poles in the bidisc; the base point is implicitly (0,0).
struct PolePair {
  BidiscPoint p;
  BidiscPoint q;

  friend bool operator==(const PolePair&, const PolePair&) = default;
};

}  // namespace bidisc
