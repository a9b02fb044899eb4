#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

#include "bidisc/exec.hpp"
#include "bidisc/extremal.hpp"
#include "bidisc/inversion.hpp"
#include "bidisc/pick1d.hpp"
#include "bidisc/random.hpp"
#include "bidisc/regions.hpp"

namespace bidisc {

inline constexpr double kCertificateTol = 1e-10;

struct SolverConfig {
  std::uint64_t seed = kDefaultSeed;
  double eps = kDefaultRegionEps;
  InversionConfig inversion{};
  double fallback_delta = 1e-4;
  Exec exec = Exec::parallel;
};

/// Base point z and poles p, q in the bidisc.
struct Problem {
  BidiscPoint z{};
  BidiscPoint p{};
  BidiscPoint q{};

  /// Throws Error(InvalidPoint / DiagonalPoles / PoleAtBase).
  void validate() const;
  /// Poles after moving z to the origin.
  PolePair normalized() const noexcept;
};

/// Which symmetry of the normalized pair the witnesses were built on.
struct Orientation {
  bool swap_coordinates = false;
  bool swap_poles = false;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// z -> (z, z psi(z)) in oriented coordinates.
struct GeodesicDisc {
  PickInterpolant psi;
  cplx arg_p, arg_q;
};

/// z -> phi_{alpha,beta,omega}(z) in oriented coordinates.
struct ExtremalDisc {
  ExtremalParams params;
  cplx arg_p, arg_q;
};

/// x -> m_a(x_1) m_b(x_1) in oriented coordinates.
struct CoordinateLeftInverse {
  cplx a, b;
};

struct Residuals {
  double interp_p = 0.0;
  double interp_q = 0.0;
  double vanish_p = 0.0;
  double vanish_q = 0.0;
  double value_gap = 0.0;

  double max() const noexcept {
    return std::max({interp_p, interp_q, vanish_p, vanish_q, value_gap});
  }
};

struct FallbackRecord {
  double delta = 0.0;
  /// Values at (delta, delta/2) along direction 0, then direction 1.
  std::array<double, 4> values{};
  std::array<Region, 4> regions{};
  double extrapolated = 0.0;
  double spread = 0.0;
};

struct SolveStats {
  std::uint64_t seed = 0;
  int orientation_tries = 0;
  int starts_run = 0;
  long iterations = 0;
};

enum class CertificateStatus { Valid, Fallback };

/// Witness pair (disc through the origin hitting both poles, left inverse vanishing at both)
/// for the normalized problem, with residuals proving the value from both sides.
struct Certificate {
  Region region = Region::BoundaryBand;
  CertificateStatus status = CertificateStatus::Valid;
  double value = 0.0;
  BidiscPoint base{};
  PolePair poles{};  ///< normalized
  Orientation orientation{};
  std::variant<std::monostate, GeodesicDisc, ExtremalDisc> disc;
  std::variant<std::monostate, CoordinateLeftInverse, LeftInverse> left_inverse;
  Residuals residuals{};
  std::optional<FallbackRecord> fallback;
  SolveStats stats{};

  bool valid() const noexcept {
    return status == CertificateStatus::Valid && residuals.max() < kCertificateTol;
  }
  bool has_witnesses() const noexcept {
    return !std::holds_alternative<std::monostate>(disc) && !std::holds_alternative<std::monostate>(left_inverse);
  }
  /// Disc in normalized coordinates; disc_at(0) = (0,0).
  BidiscPoint disc_at(cplx z) const;
  cplx arg_p() const;
  cplx arg_q() const;
  /// Left inverse in normalized coordinates.
  cplx left_inverse_at(const BidiscPoint& x) const;
  /// Same maps in the original coordinates of the problem.
  BidiscPoint disc_at_original(cplx z) const { return automorphism_normalize(base, disc_at(z)); }
  cplx left_inverse_at_original(const BidiscPoint& x) const {
    return left_inverse_at(automorphism_normalize(base, x));
  }
};

Certificate solve(const Problem& problem, const SolverConfig& config = {});

/// Closed form on U and sigma(U).
Certificate omega1_solve(const PolePair& pair, double eps = kDefaultRegionEps);

/// Inversion of big_phi on E1..E4. Throws Error(NoConvergence) when the budget is exhausted.
Certificate omega2_solve(const PolePair& pair, const SolverConfig& config = {});

/// Richardson-extrapolated value near the thin sets and the boundary band.
Certificate thin_set_fallback(const Problem& problem, const SolverConfig& config = {});

/// Fills residuals from the witnesses and the claimed value.
Residuals compute_residuals(const Certificate& cert);

}  // namespace bidisc
