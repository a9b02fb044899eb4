#pragma once

#include "bidisc/mobius.hpp"
#include "bidisc/types.hpp"

namespace bidisc {

/// Minimum |alpha - beta| for the three-extremal family and the critical tau.
inline constexpr double kDegenerateTol = 1e-12;

/// Parameters (alpha, beta, c, omega, t) of a three-extremal disc
/// phi(z) = (omega z m_alpha(z), z m_beta(z)) and its pole arguments c, m_gamma(c).
struct ExtremalParams {
  cplx alpha{};
  cplx beta{};
  cplx c{};
  cplx omega{1.0, 0.0};
  double t = 0.5;

  /// Throws Error(InvalidArgument / InvalidPoint) on a malformed tuple.
  void validate() const;
  cplx gamma() const noexcept { return t * alpha + (1.0 - t) * beta; }
  /// Second pole argument m_gamma(c).
  cplx partner() const noexcept { return mobius_map(gamma(), c); }
};

inline cplx gamma(cplx alpha, cplx beta, double t) noexcept { return t * alpha + (1.0 - t) * beta; }

inline BidiscPoint phi(cplx alpha, cplx beta, cplx omega, cplx zeta) noexcept {
  return {omega * zeta * mobius_map(alpha, zeta), zeta * mobius_map(beta, zeta)};
}

inline BidiscPoint phi(const ExtremalParams& P, cplx zeta) noexcept {
  return phi(P.alpha, P.beta, P.omega, zeta);
}

/// conj(alpha - beta) / (alpha - beta). Throws Error(Degenerate) if alpha ~ beta.
cplx critical_tau(cplx alpha, cplx beta);

/// G = m_s o F with
///   F(x) = (t w' x1 + (1-t) x2 + tau w' x1 x2) / (1 + tau ((1-t) w' x1 + t x2)),  w' = conj(omega).
/// F is rational inner on the bidisc for t in [0,1] and unimodular omega, tau.
struct LeftInverse {
  double t = 0.5;
  cplx omega{1.0, 0.0};
  cplx tau{1.0, 0.0};
  cplx shift{};

  /// F before the post-composition.
  cplx raw(const BidiscPoint& x) const noexcept;
  cplx operator()(const BidiscPoint& x) const noexcept { return mobius_map(shift, raw(x)); }
};

inline cplx left_inverse_eval(const LeftInverse& L, const BidiscPoint& x) noexcept { return L(x); }

/// (phi(c), phi(m_gamma(c))). Throws Error(DiagonalOutput) if m_gamma(c) = c.
PolePair big_phi(const ExtremalParams& P);

/// log|c m_gamma(c)|.
double omega2_value(const ExtremalParams& P);

/// The left inverse with critical tau, shifted so that it vanishes at both poles of big_phi(P).
LeftInverse certified_left_inverse(const ExtremalParams& P);

/// Taylor data of f where F(phi(z)) = z f(z): f(0) = gamma and f'(0), computed in closed form
/// from the series of phi and F.
struct OriginJet {
  cplx value;
  cplx derivative;

  /// |f'(0)| / (1 - |f(0)|^2); equals 1 exactly when f is a disc automorphism.
  double schwarz_pick_ratio() const noexcept {
    return std::abs(derivative) / (1.0 - std::norm(value));
  }
};

OriginJet origin_jet(cplx alpha, cplx beta, double t, cplx tau) noexcept;

/// Representative of {P, (-alpha,-beta,-c,omega,t)} with Re(alpha) > 0 (ties: Im(alpha) > 0).
ExtremalParams canonicalize(ExtremalParams P) noexcept;

}  // namespace bidisc
