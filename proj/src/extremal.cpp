#include "bidisc/extremal.hpp"

namespace bidisc {

void ExtremalParams::validate() const {
  (void)DiscPoint(alpha);
  (void)DiscPoint(beta);
  (void)DiscPoint(c);
  (void)Unimodular(omega);
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidArgument, "t must lie in (0,1)");
  if (std::abs(alpha - beta) < kDegenerateTol) throw Error(ErrorCode::Degenerate, "alpha = beta");
  if (c == 0.0) throw Error(ErrorCode::InvalidArgument, "c = 0 puts a pole at the base point");
}

cplx critical_tau(cplx alpha, cplx beta) {
  const cplx d = alpha - beta;
  if (std::abs(d) < kDegenerateTol) throw Error(ErrorCode::Degenerate, "critical tau needs alpha != beta");
  return std::conj(d) / d;
}

cplx LeftInverse::raw(const BidiscPoint& x) const noexcept {
  const cplx u = std::conj(omega) * x.x1;
  const cplx num = t * u + (1.0 - t) * x.x2 + tau * u * x.x2;
  const cplx den = 1.0 + tau * ((1.0 - t) * u + t * x.x2);
  return num / den;
}

PolePair big_phi(const ExtremalParams& P) {
  const cplx second = P.partner();
  if (std::abs(second - P.c) < kDegenerateTol)
    throw Error(ErrorCode::DiagonalOutput, "c is the fixed point of m_gamma");
  return {phi(P, P.c), phi(P, second)};
}

double omega2_value(const ExtremalParams& P) {
  const cplx second = P.partner();
  if (std::abs(second - P.c) < kDegenerateTol)
    throw Error(ErrorCode::DiagonalOutput, "c is the fixed point of m_gamma");
  return std::log(std::abs(P.c * second));
}

LeftInverse certified_left_inverse(const ExtremalParams& P) {
  LeftInverse L{P.t, P.omega, critical_tau(P.alpha, P.beta), {}};
  L.shift = L.raw(phi(P, P.c));
  return L;
}

// Series to second order: z m_a(z) = a z - (1 - |a|^2) z^2 + O(z^3). Substituting into F gives
//   f(0)  = gamma,
//   f'(0) = -[t (1 - |alpha|^2) + (1 - t)(1 - |beta|^2)] - tau t (1 - t) (alpha - beta)^2.
OriginJet origin_jet(cplx alpha, cplx beta, double t, cplx tau) noexcept {
  const double a = t * (1.0 - std::norm(alpha)) + (1.0 - t) * (1.0 - std::norm(beta));
  const cplx d = alpha - beta;
  return {gamma(alpha, beta, t), -a - tau * t * (1.0 - t) * d * d};
}

ExtremalParams canonicalize(ExtremalParams P) noexcept {
  constexpr double kTie = 1e-14;
  const bool flip = P.alpha.real() < -kTie || (std::abs(P.alpha.real()) <= kTie && P.alpha.imag() < 0.0);
  if (flip) {
    P.alpha = -P.alpha;
    P.beta = -P.beta;
    P.c = -P.c;
  }
  return P;
}

}  // namespace bidisc
