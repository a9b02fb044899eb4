#include "bidisc/proposition.hpp"

#include "bidisc/mobius.hpp"

namespace bidisc {

namespace {

constexpr double kDistinctTol = 1e-12;

bool close(cplx a, cplx b) { return std::abs(a - b) < kDistinctTol; }

}  // namespace

InversionMatrices inversion_matrices(const PolePair& pair, cplx omega, cplx l) {
  // alpha-values at the two pole arguments c and l/c, and beta-values likewise.
  const cplx z1 = pair.p.x1 / omega, z2 = pair.q.x1 / omega;
  const cplx w1 = pair.p.x2, w2 = pair.q.x2;
  if (close(z1, z2) || close(w1, w2) || close(z1, w1) || close(z2, w2) || std::abs(l) < kDistinctTol)
    throw Error(ErrorCode::Degenerate, "pole pair violates the distinctness hypotheses");

  InversionMatrices out;
  out.M << z2 * (1.0 - z1 / l) / (z2 - z1), z1 * (z2 - l) / (z2 - z1),
           w2 * (1.0 - w1 / l) / (w2 - w1), w1 * (w2 - l) / (w2 - w1);
  out.N << (1.0 - z2 / l) / (z1 - z2), (z1 - l) / (z1 - z2),
           (1.0 - w2 / l) / (w1 - w2), (w1 - l) / (w1 - w2);

  // M v = conj(N) conj(v). At least one of M, N is invertible; use the better conditioned.
  const double rm = std::abs(out.M.determinant()) / std::max(out.M.squaredNorm(), 1e-300);
  const double rn = std::abs(out.N.determinant()) / std::max(out.N.squaredNorm(), 1e-300);
  out.m_side = rm >= rn;
  out.P = out.m_side ? Eigen::Matrix2cd(out.M.inverse() * out.N.conjugate())
                     : Eigen::Matrix2cd(out.N.inverse() * out.M.conjugate());
  return out;
}

std::vector<PropositionCandidate> proposition_refine(const PolePair& pair, cplx l_guess, cplx omega,
                                                     double consistency_tol) {
  const InversionMatrices im = inversion_matrices(pair, omega, l_guess);
  const Eigen::Matrix2cd A = Eigen::Matrix2cd::Identity() - im.P * im.P.conjugate();

  // v = (c, 1/c) spans the kernel of A, so c^2 = k1 / k2 for the least singular vector k.
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(A, Eigen::ComputeFullV);
  const Eigen::Vector2cd k = svd.matrixV().col(1);
  if (std::abs(k[1]) < 1e-300) throw Error(ErrorCode::NoCandidate, "kernel direction has no 1/c component");

  std::vector<PropositionCandidate> out;
  const cplx root = std::sqrt(k[0] / k[1]);
  for (const cplx c : {root, -root}) {
    if (!(std::abs(c) < 1.0) || c == 0.0) continue;
    const Eigen::Vector2cd v(c, 1.0 / c);
    const Eigen::Vector2cd ab = im.M * v;
    const Eigen::Vector2cd ab_conj = im.N * v;
    if (!(std::abs(ab[0]) < 1.0 && std::abs(ab[1]) < 1.0)) continue;
    const double mismatch = (ab_conj - ab.conjugate()).lpNorm<Eigen::Infinity>();
    if (!(mismatch <= consistency_tol)) continue;
    out.push_back({ab[0], ab[1], c, mismatch});
  }
  if (out.empty()) throw Error(ErrorCode::NoCandidate, "no candidate passes the disc and consistency filters");
  return out;
}

}  // namespace bidisc
