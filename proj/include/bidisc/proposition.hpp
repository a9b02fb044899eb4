#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bidisc/types.hpp"

namespace bidisc {

/// Linear system (alpha, beta)^T = M (c, 1/c)^T, (conj alpha, conj beta)^T = N (c, 1/c)^T
/// for a pole pair with alpha-values z = (p1/omega, q1/omega), beta-values w = (p2, q2)
/// and product l = c m_gamma(c).
struct InversionMatrices {
  Eigen::Matrix2cd M;
  Eigen::Matrix2cd N;
  /// M^{-1} conj(N) on the M side, N^{-1} conj(M) on the N side; v = P conj(v).
  Eigen::Matrix2cd P;
  bool m_side = true;
};

/// Throws Error(Degenerate) when z1 = z2, w1 = w2, z1 = w1, z2 = w2 or l = 0.
InversionMatrices inversion_matrices(const PolePair& pair, cplx omega, cplx l);

struct PropositionCandidate {
  cplx alpha, beta, c;
  /// |N v - conj(M v)|, the conjugate-equation mismatch.
  double consistency;
};

/// Candidates (alpha, beta, c) compatible with `pair` at product l_guess and rotation omega,
/// from the kernel of I - P conj(P). Throws Error(NoCandidate) if none survives the filters.
std::vector<PropositionCandidate> proposition_refine(const PolePair& pair, cplx l_guess, cplx omega,
                                                     double consistency_tol = 1e-8);

}  // namespace bidisc
