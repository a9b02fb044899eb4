#include "bidisc/inversion.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace bidisc {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

Vec8 pack(const ExtremalParams& P) {
  Vec8 x;
  x << P.alpha.real(), P.alpha.imag(), P.beta.real(), P.beta.imag(), P.c.real(), P.c.imag(),
      std::arg(P.omega), P.t;
  return x;
}

ExtremalParams unpack(const Vec8& x) {
  return {{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}, std::polar(1.0, x[6]), x[7]};
}

// Projection onto the admissible box: moduli <= clamp, t in [0,1], angle in (-pi, pi].
void project(Vec8& x, double clamp) {
  for (int k = 0; k < 6; k += 2) {
    const double r = std::hypot(x[k], x[k + 1]);
    if (r > clamp) {
      x[k] *= clamp / r;
      x[k + 1] *= clamp / r;
    }
  }
  x[6] = std::remainder(x[6], 2.0 * std::numbers::pi);
  x[7] = std::clamp(x[7], 1e-12, 1.0 - 1e-12);
}

Vec8 residual(const Vec8& x, const PolePair& target) {
  const ExtremalParams P = unpack(x);
  const BidiscPoint a = phi(P, P.c);
  const BidiscPoint b = phi(P, P.partner());
  const cplx r[4] = {a.x1 - target.p.x1, a.x2 - target.p.x2, b.x1 - target.q.x1, b.x2 - target.q.x2};
  Vec8 out;
  for (int k = 0; k < 4; ++k) {
    out[2 * k] = r[k].real();
    out[2 * k + 1] = r[k].imag();
  }
  return out;
}

Mat8 jacobian(const Vec8& x, const PolePair& target) {
  constexpr double h = 1e-7;
  Mat8 J;
  for (int k = 0; k < 8; ++k) {
    Vec8 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    J.col(k) = (residual(xp, target) - residual(xm, target)) / (2.0 * h);
  }
  return J;
}

}  // namespace

ExtremalParams multistart_point(std::uint64_t seed, int index, const InversionConfig& cfg) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  ExtremalParams P;
  P.alpha = rng.in_disc(cfg.start_radius);
  P.beta = rng.in_disc(cfg.start_radius);
  P.c = rng.in_disc(cfg.start_radius);
  P.omega = rng.on_circle();
  P.t = rng.uniform(cfg.t_lo, cfg.t_hi);
  return P;
}

LocalRun invert_from(const PolePair& target, const ExtremalParams& start, const InversionConfig& cfg) {
  Vec8 x = pack(start);
  project(x, cfg.modulus_clamp);
  Vec8 r = residual(x, target);
  double cost = r.squaredNorm();
  double mu = cfg.initial_damping;
  int it = 0;
  bool converged = false;

  for (; it < cfg.max_iterations; ++it) {
    if (r.lpNorm<Eigen::Infinity>() < cfg.accept_residual) {
      converged = true;
      break;
    }
    const Mat8 J = jacobian(x, target);
    const Mat8 A = J.transpose() * J;
    const Vec8 g = J.transpose() * r;
    // Damping is relative to the curvature scale so tiny poles converge as fast as large ones.
    const double scale = std::max(A.diagonal().maxCoeff(), 1e-300);
    bool stepped = false;
    while (mu < 1e12) {
      const Vec8 step = (A + mu * scale * Mat8::Identity()).ldlt().solve(-g);
      Vec8 trial = x + step;
      project(trial, cfg.modulus_clamp);
      const Vec8 rt = residual(trial, target);
      const double ct = rt.squaredNorm();
      if (std::isfinite(ct) && ct < cost) {
        x = trial;
        r = rt;
        cost = ct;
        mu = std::max(mu * 0.5, 1e-15);
        stepped = true;
        break;
      }
      mu *= 4.0;
    }
    if (!stepped) break;
  }

  if (converged) {
    // A few undamped steps push the residual to rounding level.
    for (int k = 0; k < 3; ++k) {
      const Mat8 J = jacobian(x, target);
      Vec8 trial = x + J.partialPivLu().solve(-r);
      project(trial, cfg.modulus_clamp);
      const Vec8 rt = residual(trial, target);
      if (!(rt.squaredNorm() < cost)) break;
      x = trial;
      r = rt;
      cost = rt.squaredNorm();
    }
  }

  const ExtremalParams P = unpack(x);
  const bool interior = std::abs(P.alpha) < cfg.modulus_clamp && std::abs(P.beta) < cfg.modulus_clamp &&
                        std::abs(P.c) < cfg.modulus_clamp && P.t > 1e-12 && P.t < 1.0 - 1e-12 &&
                        std::abs(P.alpha - P.beta) >= kDegenerateTol;
  return {canonicalize(P), r.lpNorm<Eigen::Infinity>(), it, converged && interior};
}

std::optional<InversionResult> invert_big_phi(const PolePair& target, std::uint64_t seed,
                                              const InversionConfig& cfg, Exec exec) {
  InversionResult out;
  if (exec == Exec::serial) {
    for (int k = 0; k < cfg.starts; ++k) {
      const LocalRun run = invert_from(target, multistart_point(seed, k, cfg), cfg);
      out.iterations += run.iterations;
      out.starts_run = k + 1;
      if (run.converged) {
        out.params = run.params;
        out.residual = run.residual;
        out.start_index = k;
        return out;
      }
    }
    return std::nullopt;
  }

  const int batch = std::max(cfg.batch, 1);
  std::vector<LocalRun> runs(static_cast<std::size_t>(batch));
  for (int first = 0; first < cfg.starts; first += batch) {
    const int count = std::min(batch, cfg.starts - first);
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < count; ++k)
      runs[static_cast<std::size_t>(k)] = invert_from(target, multistart_point(seed, first + k, cfg), cfg);
    // Report exactly what the serial path would have: stop at the lowest converging index.
    for (int k = 0; k < count; ++k) {
      const LocalRun& run = runs[static_cast<std::size_t>(k)];
      out.iterations += run.iterations;
      out.starts_run = first + k + 1;
      if (run.converged) {
        out.params = run.params;
        out.residual = run.residual;
        out.start_index = first + k;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace bidisc
