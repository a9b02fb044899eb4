#include "bidisc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "bidisc/mobius.hpp"
#include "bidisc/pick1d.hpp"

namespace bidisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

PolePair flip(const PolePair& pr) { return {{pr.p.x2, pr.p.x1}, {pr.q.x2, pr.q.x1}}; }

// ---- Optimization along the solution curve of two real equations in three unknowns.
// Both families meet their optimum where the curve folds back in one coordinate, so
// the search is parameterized by arclength instead of by any single unknown.

using V3 = std::array<double, 3>;
using Residual2 = std::function<std::array<double, 2>(const V3&)>;  // non-finite when inadmissible
using Objective = std::function<double(const V3&)>;

bool finite2(const std::array<double, 2>& r) { return std::isfinite(r[0]) && std::isfinite(r[1]); }
double norm2(const std::array<double, 2>& r) { return std::hypot(r[0], r[1]); }

bool jacobian2(const Residual2& R, const V3& x, double J[2][3]) {
  constexpr double h = 1e-7;
  for (int c = 0; c < 3; ++c) {
    V3 xp = x, xm = x;
    xp[static_cast<std::size_t>(c)] += h;
    xm[static_cast<std::size_t>(c)] -= h;
    const auto rp = R(xp), rm = R(xm);
    if (!finite2(rp) || !finite2(rm)) return false;
    for (int r = 0; r < 2; ++r) J[r][c] = (rp[static_cast<std::size_t>(r)] - rm[static_cast<std::size_t>(r)]) / (2 * h);
  }
  return true;
}

// Minimum-norm Gauss-Newton back onto the curve. Iterates toward tol; once no step
// reduces the residual, anything below kStallAccept counts as on the curve, since
// near the boundary the rounding floor of the residual sits above tol.
constexpr double kStallAccept = 1e-10;

bool correct(const Residual2& R, V3& x, double tol) {
  auto r = R(x);
  for (int k = 0; k < 30; ++k) {
    if (!finite2(r)) return false;
    if (norm2(r) < tol) return true;
    double J[2][3];
    if (!jacobian2(R, x, J)) return false;
    const double a = J[0][0] * J[0][0] + J[0][1] * J[0][1] + J[0][2] * J[0][2];
    const double b = J[0][0] * J[1][0] + J[0][1] * J[1][1] + J[0][2] * J[1][2];
    const double d = J[1][0] * J[1][0] + J[1][1] * J[1][1] + J[1][2] * J[1][2];
    const double det = a * d - b * b;
    if (!(std::abs(det) > 1e-300)) return false;
    const double y0 = (d * r[0] - b * r[1]) / det, y1 = (a * r[1] - b * r[0]) / det;
    double lam = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls, lam *= 0.5) {
      V3 trial = x;
      for (int c = 0; c < 3; ++c) trial[static_cast<std::size_t>(c)] -= lam * (J[0][c] * y0 + J[1][c] * y1);
      const auto rt = R(trial);
      if (finite2(rt) && norm2(rt) < norm2(r)) {
        x = trial;
        r = rt;
        moved = true;
        break;
      }
    }
    if (!moved) return norm2(r) < kStallAccept;
  }
  return finite2(r) && norm2(r) < kStallAccept;
}

// Projected ascent of V along the curve through x, which must already satisfy R(x) ~ 0.
V3 curve_maximize(const Residual2& R, const Objective& V, V3 x, double step, double tol) {
  double vx = V(x);
  for (int it = 0; it < 2000 && step > 1e-13; ++it) {
    double J[2][3];
    if (!jacobian2(R, x, J)) break;
    V3 T{J[0][1] * J[1][2] - J[0][2] * J[1][1], J[0][2] * J[1][0] - J[0][0] * J[1][2],
         J[0][0] * J[1][1] - J[0][1] * J[1][0]};
    const double tn = std::sqrt(T[0] * T[0] + T[1] * T[1] + T[2] * T[2]);
    if (!(tn > 0.0)) break;
    for (auto& c : T) c /= tn;
    constexpr double h = 1e-7;
    V3 xp = x, xm = x;
    for (int c = 0; c < 3; ++c) {
      xp[static_cast<std::size_t>(c)] += h * T[static_cast<std::size_t>(c)];
      xm[static_cast<std::size_t>(c)] -= h * T[static_cast<std::size_t>(c)];
    }
    const double slope = (V(xp) - V(xm)) / (2 * h);
    if (!std::isfinite(slope)) break;
    const double dir = slope >= 0.0 ? 1.0 : -1.0;
    V3 trial = x;
    for (int c = 0; c < 3; ++c) trial[static_cast<std::size_t>(c)] += dir * step * T[static_cast<std::size_t>(c)];
    const double vt = correct(R, trial, tol) ? V(trial) : kNegInf;
    if (std::isfinite(vt) && vt > vx) {
      x = trial;
      vx = vt;
      step = std::min(step * 1.5, 0.05);
    } else {
      step *= 0.5;
    }
  }
  return x;
}

// ---- Caratheodory side: rational inner functions, evaluated here independently of the solver.

cplx rational_inner(double t, cplx omega, cplx tau, const BidiscPoint& x) {
  const cplx u = std::conj(omega) * x.x1;
  return (t * u + (1.0 - t) * x.x2 + tau * u * x.x2) / (1.0 + tau * ((1.0 - t) * u + t * x.x2));
}

struct AngleEval {
  cplx fp, fq;
  double mismatch;  // pseudohyperbolic distance between the two pole values
};

AngleEval eval_angles(const PolePair& pr, double t, double a, double b) {
  const cplx om = std::polar(1.0, a), ta = std::polar(1.0, b);
  const cplx fp = rational_inner(t, om, ta, pr.p), fq = rational_inner(t, om, ta, pr.q);
  return {fp, fq, mobius_dist(fp, fq)};
}

// Damped Newton on F(p) - F(q) = 0 over the two angles.
bool refine_angles(const PolePair& pr, double t, double& a, double& b, int steps) {
  constexpr double h = 1e-7;
  auto r = [&](double x, double y) {
    const AngleEval e = eval_angles(pr, t, x, y);
    return e.fp - e.fq;
  };
  cplx cur = r(a, b);
  for (int k = 0; k < steps && std::abs(cur) > 1e-15; ++k) {
    const cplx da = (r(a + h, b) - r(a - h, b)) / (2 * h);
    const cplx db = (r(a, b + h) - r(a, b - h)) / (2 * h);
    const double det = da.real() * db.imag() - db.real() * da.imag();
    if (std::abs(det) < 1e-300) return false;
    const double sa = -(db.imag() * cur.real() - db.real() * cur.imag()) / det;
    const double sb = -(-da.imag() * cur.real() + da.real() * cur.imag()) / det;
    double lam = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls, lam *= 0.5) {
      const cplx trial = r(a + lam * sa, b + lam * sb);
      if (std::abs(trial) < std::abs(cur)) {
        a += lam * sa;
        b += lam * sb;
        cur = trial;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return eval_angles(pr, t, a, b).mismatch < kWitnessTol;
}

double family_c_value(const PolePair& pr, double t, double a, double b) {
  return std::log(std::abs(eval_angles(pr, t, a, b).fp));
}

oracle_detail::FamilyCPoint scan_one(const PolePair& pr, double t, const OracleBudget& budget) {
  const int g = budget.angle_grid;
  std::vector<double> grid(static_cast<std::size_t>(g * g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      grid[static_cast<std::size_t>(i * g + j)] = eval_angles(pr, t, kTwoPi * i / g, kTwoPi * j / g).mismatch;

  // Periodic local minima of the mismatch, best first.
  std::vector<std::pair<double, int>> minima;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const double v = grid[static_cast<std::size_t>(i * g + j)];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = (i + di + g) % g, jj = (j + dj + g) % g;
          if (grid[static_cast<std::size_t>(ii * g + jj)] < v) {
            is_min = false;
            break;
          }
        }
      if (is_min) minima.emplace_back(v, i * g + j);
    }
  std::sort(minima.begin(), minima.end());
  constexpr std::size_t kRefined = 6;
  if (minima.size() > kRefined) minima.resize(kRefined);

  oracle_detail::FamilyCPoint best;
  best.t = t;
  for (const auto& [v, idx] : minima) {
    double a = kTwoPi * (idx / g) / g, b = kTwoPi * (idx % g) / g;
    if (!refine_angles(pr, t, a, b, budget.refine_steps)) continue;
    const double val = family_c_value(pr, t, a, b);
    if (val > best.value) {
      best.theta_omega = a;
      best.theta_tau = b;
      best.value = val;
      best.residual = eval_angles(pr, t, a, b).mismatch;
      best.feasible = true;
    }
  }
  return best;
}

// Maximizes the family-C value along the curve F(p) = F(q) in (t, theta_omega, theta_tau).
oracle_detail::FamilyCPoint refine_curve(const PolePair& pr, oracle_detail::FamilyCPoint seed) {
  const Residual2 R = [&](const V3& x) -> std::array<double, 2> {
    if (!(x[0] > 0.0 && x[0] < 1.0)) return {kPosInf, kPosInf};
    const AngleEval e = eval_angles(pr, x[0], x[1], x[2]);
    const cplx d = e.fp - e.fq;
    return {d.real(), d.imag()};
  };
  const Objective V = [&](const V3& x) {
    return x[0] > 0.0 && x[0] < 1.0 ? family_c_value(pr, x[0], x[1], x[2]) : kNegInf;
  };
  V3 x{seed.t, seed.theta_omega, seed.theta_tau};
  if (!correct(R, x, 1e-13)) return seed;
  x = curve_maximize(R, V, x, 0.01, 1e-13);
  const double v = V(x), res = eval_angles(pr, x[0], x[1], x[2]).mismatch;
  if (std::isfinite(v) && v > seed.value && res < kWitnessTol) {
    seed.t = x[0];
    seed.theta_omega = x[1];
    seed.theta_tau = x[2];
    seed.value = v;
    seed.residual = res;
  }
  return seed;
}

// ---- Lempert side: discs z -> (omega z m_a(z), z m_b(z)) through the origin.

// The unique a with z m_a(z) = w: a + w conj(a) = (w + z^2) / z.
cplx solve_zero(cplx z, cplx w) {
  const cplx r = (w + z * z) / z;
  return (r - w * std::conj(r)) / (1.0 - std::norm(w));
}

// Preimages of w under z m_b(z): roots of z^2 - (b + w conj(b)) z + w, both in the disc.
// Branch 0 is the root of smaller modulus.
cplx preimage(cplx b, cplx w, int branch) {
  const cplx s = b + w * std::conj(b);
  const cplx d = std::sqrt(s * s - 4.0 * w);
  cplx r0 = 0.5 * (s + d), r1 = 0.5 * (s - d);
  // The larger root is computed directly; the smaller from the product to avoid cancellation.
  if (std::abs(r1) > std::abs(r0)) std::swap(r0, r1);
  if (r0 != 0.0) r1 = w / r0;
  return branch == 0 ? r1 : r0;
}

struct DiscFit {
  cplx zp, zq, a;
  cplx r;  // first-coordinate residual at the second pole
};

DiscFit fit_disc(const PolePair& pr, double theta, cplx b, int branch) {
  const cplx om = std::polar(1.0, theta);
  DiscFit f;
  f.zp = preimage(b, pr.p.x2, branch & 1);
  f.zq = preimage(b, pr.q.x2, (branch >> 1) & 1);
  f.a = solve_zero(f.zp, pr.p.x1 / om);
  f.r = om * f.zq * mobius_map(f.a, f.zq) - pr.q.x1;
  return f;
}

bool admissible(const DiscFit& f, cplx b) {
  return std::abs(b) < 1.0 && std::abs(f.a) < 1.0 && std::abs(f.zp) < 1.0 && std::abs(f.zq) < 1.0 && f.zp != 0.0 &&
         f.zq != 0.0 && std::isfinite(std::abs(f.r));
}

// Interpolation residual of the disc, recomputed from its explicit formula.
double disc_residual(const PolePair& pr, double theta, cplx b, int branch) {
  const DiscFit f = fit_disc(pr, theta, b, branch);
  const cplx om = std::polar(1.0, theta);
  auto h = [&](cplx z) { return BidiscPoint{om * z * mobius_map(f.a, z), z * mobius_map(b, z)}; };
  return std::max(sup_dist(h(f.zp), pr.p), sup_dist(h(f.zq), pr.q));
}

// Damped Newton in the two real coordinates of b at fixed theta.
bool fit_b(const PolePair& pr, double theta, int branch, cplx& b, int steps) {
  auto res = [&](cplx bb) {
    const DiscFit f = fit_disc(pr, theta, bb, branch);
    return admissible(f, bb) ? f.r : cplx(kPosInf, 0.0);
  };
  cplx r = res(b);
  if (!std::isfinite(std::abs(r))) return false;
  for (int k = 0; k < steps && std::abs(r) > 1e-16; ++k) {
    const double h = 1e-7 * std::max(1e-3, 1.0 - std::abs(b));
    const cplx jx = (res(b + h) - res(b - h)) / (2 * h);
    const cplx jy = (res(b + cplx(0, h)) - res(b - cplx(0, h))) / (2 * h);
    // Solve [Re jx Re jy; Im jx Im jy] s = -r.
    const double det = jx.real() * jy.imag() - jy.real() * jx.imag();
    if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
    const double sx = (-r.real() * jy.imag() + jy.real() * r.imag()) / det;
    const double sy = (-jx.real() * r.imag() + jx.imag() * r.real()) / det;
    double lam = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls, lam *= 0.5) {
      const cplx trial = b + lam * cplx(sx, sy);
      const cplx rt = res(trial);
      if (std::abs(rt) < std::abs(r)) {
        b = trial;
        r = rt;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return std::isfinite(std::abs(r)) && disc_residual(pr, theta, b, branch) < 1e-10;
}

double disc_value(const PolePair& pr, double theta, cplx b, int branch) {
  const DiscFit f = fit_disc(pr, theta, b, branch);
  return std::log(std::abs(f.zp * f.zq));
}

// Minimizes log|z_p z_q| along the curve of fitted discs in (theta, Re b, Im b).
// Curve coordinates (theta, u) with b = tanh|u| u/|u|, which puts the boundary at infinity.
cplx b_of(const V3& x) {
  const cplx u{x[1], x[2]};
  const double r = std::abs(u);
  return r < 1e-8 ? u : u * (std::tanh(r) / r);
}

V3 curve_point(double theta, cplx b) {
  const double r = std::abs(b);
  const cplx u = r < 1e-8 ? b : b * (std::atanh(std::min(r, 1.0 - 1e-16)) / r);
  return {theta, u.real(), u.imag()};
}

Residual2 disc_curve(const PolePair& pr, int branch) {
  return [&pr, branch](const V3& x) -> std::array<double, 2> {
    const cplx b = b_of(x);
    const DiscFit f = fit_disc(pr, x[0], b, branch);
    if (!admissible(f, b)) return {kPosInf, kPosInf};
    return {f.r.real(), f.r.imag()};
  };
}

oracle_detail::FamilyBPoint descend_curve(const PolePair& pr, oracle_detail::FamilyBPoint cur) {
  const int branch = cur.branch;
  const Residual2 R = disc_curve(pr, branch);
  const Objective V = [&](const V3& x) {
    const cplx b = b_of(x);
    const DiscFit f = fit_disc(pr, x[0], b, branch);
    return admissible(f, b) ? -std::log(std::abs(f.zp * f.zq)) : kNegInf;
  };
  V3 x = curve_point(cur.theta, cur.b);
  if (correct(R, x, 1e-13)) x = curve_maximize(R, V, x, 0.01, 1e-13);
  const cplx b = b_of(x);
  const DiscFit f = fit_disc(pr, x[0], b, branch);
  const double res = disc_residual(pr, x[0], b, branch);
  if (admissible(f, b) && res < kWitnessTol && -V(x) <= cur.value) {
    cur.theta = x[0];
    cur.b = b;
    cur.value = -V(x);
  }
  const DiscFit g = fit_disc(pr, cur.theta, cur.b, branch);
  cur.z_p = g.zp;
  cur.z_q = g.zq;
  cur.residual = disc_residual(pr, cur.theta, cur.b, branch);
  return cur;
}

oracle_detail::FamilyBPoint family_b_one(const PolePair& pr, std::uint64_t seed, int index) {
  Rng rng(seed);
  oracle_detail::FamilyBPoint pt;
  pt.theta = rng.angle();
  pt.branch = index % 4;
  // Best of a few candidates by residual. Half the starts spread log-uniformly toward
  // the boundary, where extremal zeros concentrate.
  cplx b{};
  double best_r = kPosInf;
  for (int c = 0; c < 64; ++c) {
    const double radius = index % 8 < 4 ? std::sqrt(rng.uniform()) : 1.0 - std::pow(10.0, -rng.uniform(0.0, 6.0));
    const cplx cand = std::polar(std::min(radius, 1.0 - 1e-12), rng.angle());
    const DiscFit f = fit_disc(pr, pt.theta, cand, pt.branch);
    if (admissible(f, cand) && std::abs(f.r) < best_r) {
      best_r = std::abs(f.r);
      b = cand;
    }
  }
  if (!std::isfinite(best_r)) return pt;
  if (!fit_b(pr, pt.theta, pt.branch, b, 80)) {
    // No disc at this theta; let theta move with b.
    V3 x = curve_point(pt.theta, b);
    if (!correct(disc_curve(pr, pt.branch), x, 1e-13)) return pt;
    pt.theta = x[0];
    b = b_of(x);
  }
  pt.b = b;
  pt.value = disc_value(pr, pt.theta, b, pt.branch);
  pt = descend_curve(pr, pt);
  pt.feasible = pt.residual < kWitnessTol;
  return pt;
}

}  // namespace

OracleBudget OracleBudget::scaled(int factor) const {
  OracleBudget b = *this;
  b.disc_starts *= factor;
  // Nodes are k/(t_grid+1), so every old node stays a node.
  b.t_grid = (t_grid + 1) * factor - 1;
  return b;
}

namespace oracle_detail {

Bound family_a_lower(const PolePair& pair) {
  const auto& [p, q] = pair;
  Bound best{std::log(std::abs(p.x1 * q.x1)), "A:m_p1*m_q1(x1)", {}, 0.0};
  const double b_val = std::log(std::abs(p.x2 * q.x2));
  if (b_val > best.value) best = {b_val, "A:m_p2*m_q2(x2)", {}, 0.0};
  return best;
}

Bound family_a_upper(const PolePair& pair) {
  Bound best{kPosInf, "none", {}, 1.0};

  // Two-geodesic discs z -> (z, z psi(z)) and the coordinate swap.
  const PolePair oriented[2] = {pair, flip(pair)};
  for (int o = 0; o < 2; ++o) {
    const auto& [p, q] = oriented[o];
    if (!(std::abs(p.x2) < std::abs(p.x1) && std::abs(q.x2) < std::abs(q.x1)) || p.x1 == q.x1) continue;
    const cplx rp = p.x2 / p.x1, rq = q.x2 / q.x1;
    if (!(std::abs(rp) < kDiscBound && std::abs(rq) < kDiscBound)) continue;
    const PickDatum datum{DiscPoint(p.x1), DiscPoint(q.x1), DiscPoint(rp), DiscPoint(rq)};
    if (!pick_solvable(datum)) continue;
    const PickInterpolant psi = pick_interpolant(datum);
    auto disc = [&](cplx z) { return BidiscPoint{z, z * psi(z)}; };
    const double res = std::max(sup_dist(disc(p.x1), p), sup_dist(disc(q.x1), q));
    const double val = std::log(std::abs(p.x1 * q.x1));
    if (res < kWitnessTol && val < best.value)
      best = {val, o == 0 ? "A:two_geodesic" : "A:two_geodesic(swapped)", {}, res};
  }

  return best;
}

std::vector<FamilyCPoint> family_c_scan(const PolePair& pair, const OracleBudget& budget, Exec exec) {
  const PolePair oriented[2] = {pair, flip(pair)};
  const int nt = budget.t_grid;
  std::vector<FamilyCPoint> out(static_cast<std::size_t>(2 * nt));
  auto cell = [&](int k) {
    const double t = static_cast<double>(k % nt + 1) / (nt + 1);
    out[static_cast<std::size_t>(k)] = scan_one(oriented[k / nt], t, budget);
  };
  if (exec == Exec::serial) {
    for (int k = 0; k < 2 * nt; ++k) cell(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < 2 * nt; ++k) cell(k);
  }
  return out;
}

std::vector<FamilyBPoint> family_b_starts(const PolePair& pair, const OracleBudget& budget, Exec exec) {
  const PolePair oriented[2] = {pair, flip(pair)};
  const int n = budget.disc_starts;
  std::vector<FamilyBPoint> out(static_cast<std::size_t>(2 * n));
  auto cell = [&](int k) {
    out[static_cast<std::size_t>(k)] = family_b_one(oriented[k / n], derive_seed(budget.seed, 0xb000 + k % n), k % n);
  };
  if (exec == Exec::serial) {
    for (int k = 0; k < 2 * n; ++k) cell(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < 2 * n; ++k) cell(k);
  }
  return out;
}

}  // namespace oracle_detail

Bound cara_lower(const PolePair& pair, const OracleBudget& budget) {
  Bound best = oracle_detail::family_a_lower(pair);

  const auto scan = oracle_detail::family_c_scan(pair, budget, budget.exec);
  const int nt = budget.t_grid;
  // Local maxima of the value along t in each orientation; the last feasible t before an
  // infeasible stretch counts, since the maximum often sits where the curve folds.
  auto value_at = [&](int k) {
    const auto& c = scan[static_cast<std::size_t>(k)];
    return c.feasible ? c.value : kNegInf;
  };
  std::vector<int> order;
  for (int k = 0; k < static_cast<int>(scan.size()); ++k) {
    const int i = k % nt;
    const double v = value_at(k);
    if (!std::isfinite(v)) continue;
    if ((i == 0 || value_at(k - 1) <= v) && (i == nt - 1 || value_at(k + 1) <= v)) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return value_at(a) > value_at(b); });
  constexpr std::size_t kRefinedT = 8;
  if (order.size() > kRefinedT) order.resize(kRefinedT);

  const PolePair oriented[2] = {pair, flip(pair)};
  for (const int k : order) {
    const auto& pt = scan[static_cast<std::size_t>(k)];
    const auto r = refine_curve(oriented[k / nt], pt);
    if (r.value > best.value && r.residual < kWitnessTol) {
      best = {r.value, k / nt == 0 ? "C:rational_inner" : "C:rational_inner(swapped)",
              {r.t, r.theta_omega, r.theta_tau}, r.residual};
    }
  }
  return best;
}

Bound lempert_upper(const PolePair& pair, const OracleBudget& budget) {
  Bound best = oracle_detail::family_a_upper(pair);

  const auto starts = oracle_detail::family_b_starts(pair, budget, budget.exec);
  const int n = budget.disc_starts;
  for (int k = 0; k < static_cast<int>(starts.size()); ++k) {
    const auto& s = starts[static_cast<std::size_t>(k)];
    if (!s.feasible || !(s.value < best.value)) continue;
    best = {s.value,
            k / n == 0 ? "B:three_extremal" : "B:three_extremal(swapped)",
            {s.theta, s.z_p.real(), s.z_p.imag(), s.z_q.real(), s.z_q.imag()},
            s.residual};
  }
  if (!std::isfinite(best.value)) throw Error(ErrorCode::NoFeasibleDisc, "no disc met the residual gate");
  return best;
}

Sandwich sandwich(const PolePair& pair, const OracleBudget& budget) {
  return {cara_lower(pair, budget), lempert_upper(pair, budget)};
}

}  // namespace bidisc
