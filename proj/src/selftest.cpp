#include "bidisc/selftest.hpp"

#include <cmath>
#include <sstream>

#include "bidisc/extremal.hpp"
#include "bidisc/mobius.hpp"
#include "bidisc/oracle.hpp"
#include "bidisc/pick1d.hpp"
#include "bidisc/random.hpp"
#include "bidisc/regions.hpp"
#include "bidisc/sampling.hpp"
#include "bidisc/solver.hpp"

namespace bidisc {

namespace {

std::string fmt_err(const char* what, double v) {
  std::ostringstream os;
  os.precision(3);
  os << what << '=' << v;
  return os.str();
}

SuiteResult mobius_suite(int n, std::uint64_t seed) {
  Rng rng(seed);
  double inv = 0, iso = 0, bound = 0;
  for (int k = 0; k < n; ++k) {
    // Rounding near the circle grows like eps / (1 - |x|^2); sample a compact sub-disc.
    const cplx a = rng.in_disc(0.95), z = rng.in_disc(0.95), x = rng.in_disc(0.95), y = rng.in_disc(0.95);
    inv = std::max(inv, std::abs(mobius_map(a, mobius_map(a, z)) - z));
    iso = std::max(iso, std::abs(mobius_dist(mobius_map(a, x), mobius_map(a, y)) - mobius_dist(x, y)));
  }
  for (int k = 0; k < n / 10; ++k) {
    std::vector<DiscPoint> zeros;
    const int deg = static_cast<int>(rng.next() % 4);
    for (int d = 0; d < deg; ++d) zeros.emplace_back(rng.in_disc(0.99));
    const BlaschkeProduct B(zeros, Unimodular(rng.on_circle()));
    bound = std::max(bound, std::abs(std::abs(B(rng.on_circle())) - 1.0));
  }
  const bool ok = inv < 1e-13 && iso < 1e-13 && bound < 1e-12;
  return {"mobius", ok, fmt_err("involution", inv) + " " + fmt_err("isometry", iso) + " " + fmt_err("boundary", bound)};
}

SuiteResult pick_suite(int n, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0, sup = 0;
  int done = 0;
  while (done < n) {
    const cplx z1 = rng.in_disc(), z2 = rng.in_disc(), w1 = rng.in_disc(), w2 = rng.in_disc();
    const PickDatum d{DiscPoint(z1), DiscPoint(z2), DiscPoint(w1), DiscPoint(w2)};
    if (!pick_solvable(d)) continue;
    const PickInterpolant psi = pick_interpolant(d);
    worst = std::max({worst, std::abs(psi(z1) - w1), std::abs(psi(z2) - w2)});
    for (int k = 0; k < 10; ++k) sup = std::max(sup, std::abs(psi(rng.in_disc())));
    ++done;
  }
  return {"pick1d", worst < 1e-13 && sup < 1.0, fmt_err("residual", worst) + " " + fmt_err("sup|psi|", sup)};
}

SuiteResult regions_suite(int n, std::uint64_t seed) {
  Rng rng(seed);
  int generic = 0, equivariance_failures = 0;
  for (int k = 0; k < n; ++k) {
    const PolePair pr{rng.in_bidisc(), rng.in_bidisc()};
    const Region r = classify(pr, 1e-6).region;
    if (is_generic(r)) ++generic;
    if (classify(sigma(pr), 1e-6).region != sigma_label(r)) ++equivariance_failures;
  }
  const double frac = static_cast<double>(generic) / n;
  return {"regions", frac >= 0.99 && equivariance_failures == 0,
          fmt_err("generic_fraction", frac) + " " + fmt_err("sigma_failures", equivariance_failures)};
}

SuiteResult extremal_suite(int n, std::uint64_t seed) {
  const double ident = left_inverse_identity_error(n, 10, seed, [](cplx a, cplx b) { return critical_tau(a, b); });
  Rng rng(derive_seed(seed, 1));
  double crit = 0, vanish = 0, gap = 0;
  for (int k = 0; k < n / 10; ++k) {
    const ExtremalParams P = random_extremal_params(rng);
    if (std::abs(P.alpha - P.beta) < 1e-6 || std::abs(P.partner() - P.c) < 1e-6) continue;
    crit = std::max(crit, std::abs(origin_jet(P.alpha, P.beta, P.t, critical_tau(P.alpha, P.beta)).schwarz_pick_ratio() - 1.0));
    const PolePair pr = big_phi(P);
    const LeftInverse G = certified_left_inverse(P);
    vanish = std::max({vanish, std::abs(G(pr.p)), std::abs(G(pr.q))});
    gap = std::max(gap, std::abs(std::log(std::abs(G({}))) - omega2_value(P)));
  }
  const bool ok = ident < 1e-12 && crit < 1e-10 && vanish < 1e-12 && gap < 1e-12;
  return {"extremal", ok,
          fmt_err("identity", ident) + " " + fmt_err("critical", crit) + " " + fmt_err("vanish", vanish) + " " +
              fmt_err("gap", gap)};
}

SuiteResult solver_suite(int n, std::uint64_t seed) {
  Rng rng(seed);
  SolverConfig cfg;
  cfg.seed = seed;
  double worst_value = 0, worst_res = 0, worst_inv = 0;
  for (int k = 0; k < n; ++k) {
    const Region want = (k % 2 == 0) ? Region::E1 : Region::E2;
    const ExtremalParams P = random_params_in(rng, want);
    const Certificate cert = solve(Problem{{}, big_phi(P).p, big_phi(P).q}, cfg);
    worst_value = std::max(worst_value, std::abs(cert.value - omega2_value(P)));
    worst_res = std::max(worst_res, cert.residuals.max());

    const PolePair pr = random_generic_pair(rng);
    const double v = solve(Problem{{}, pr.p, pr.q}, cfg).value;
    const double vs = solve(Problem{{}, sigma(pr).p, sigma(pr).q}, cfg).value;
    const double vw = solve(Problem{{}, pr.q, pr.p}, cfg).value;
    worst_inv = std::max({worst_inv, std::abs(v - vs), std::abs(v - vw)});
  }
  const bool ok = worst_value < 1e-10 && worst_res < kCertificateTol && worst_inv < 1e-9;
  return {"solver", ok,
          fmt_err("roundtrip", worst_value) + " " + fmt_err("residual", worst_res) + " " +
              fmt_err("invariance", worst_inv)};
}

SuiteResult oracle_suite(int n, std::uint64_t seed) {
  Rng rng(seed);
  SolverConfig cfg;
  cfg.seed = seed;
  OracleBudget budget;
  budget.seed = seed;
  double worst_width = 0;
  int outside = 0;
  for (int k = 0; k < n; ++k) {
    const PolePair pr = random_generic_pair(rng);
    const Certificate cert = solve(Problem{{}, pr.p, pr.q}, cfg);
    const Sandwich s = sandwich(pr, budget);
    worst_width = std::max(worst_width, s.width());
    if (!s.contains(cert.value)) ++outside;
  }
  return {"oracle", worst_width < 1e-6 && outside == 0,
          fmt_err("width", worst_width) + " " + fmt_err("outside", outside)};
}

}  // namespace

double left_inverse_identity_error(int n, int per, std::uint64_t seed, const TauRule& rule) {
  Rng rng(seed);
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    const ExtremalParams P = random_extremal_params(rng, 0.99);
    if (std::abs(P.alpha - P.beta) < 1e-6) continue;
    const LeftInverse F{P.t, P.omega, rule(P.alpha, P.beta), {}};
    for (int j = 0; j < per; ++j) {
      const cplx z = rng.in_disc();
      worst = std::max(worst, std::abs(F.raw(phi(P, z)) - z * mobius_map(P.gamma(), z)));
    }
  }
  return worst;
}

std::vector<SuiteResult> run_selftest(bool quick, std::uint64_t seed) {
  const int scale = quick ? 1 : 10;
  return {
      mobius_suite(1000 * scale, derive_seed(seed, 1)),
      pick_suite(1000 * scale, derive_seed(seed, 2)),
      regions_suite(10000 * scale, derive_seed(seed, 3)),
      extremal_suite(1000 * scale, derive_seed(seed, 4)),
      solver_suite(4 * scale, derive_seed(seed, 5)),
      oracle_suite(quick ? 2 : 10, derive_seed(seed, 6)),
  };
}

}  // namespace bidisc
