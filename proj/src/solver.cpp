#include "bidisc/solver.hpp"

#include <cmath>
#include <vector>

namespace bidisc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PolePair orient(const PolePair& pair, const Orientation& o) {
  const PolePair a = o.swap_coordinates ? sigma(pair) : pair;
  return o.swap_poles ? swap_poles(a) : a;
}

PolePair shifted(const PolePair& pair, const std::array<cplx, 4>& d, double h) {
  return {{pair.p.x1 + h * d[0], pair.p.x2 + h * d[1]}, {pair.q.x1 + h * d[2], pair.q.x2 + h * d[3]}};
}

}  // namespace

void Problem::validate() const {
  require_in_bidisc(z, "base point z");
  require_in_bidisc(p, "pole p");
  require_in_bidisc(q, "pole q");
  if (sup_dist(p, q) <= kCoincidenceTol) throw Error(ErrorCode::DiagonalPoles, "p = q");
  if (sup_dist(p, z) <= kCoincidenceTol || sup_dist(q, z) <= kCoincidenceTol)
    throw Error(ErrorCode::PoleAtBase, "a pole coincides with the base point");
}

PolePair Problem::normalized() const noexcept {
  return {automorphism_normalize(z, p), automorphism_normalize(z, q)};
}

BidiscPoint Certificate::disc_at(cplx z) const {
  const BidiscPoint inner = std::visit(
      overloaded{
          [&](const GeodesicDisc& g) { return BidiscPoint{z, z * g.psi(z)}; },
          [&](const ExtremalDisc& e) { return phi(e.params, z); },
          [](std::monostate) -> BidiscPoint {
            throw Error(ErrorCode::InvalidArgument, "certificate carries no disc");
          },
      },
      disc);
  return orientation.swap_coordinates ? swap_coordinates(inner) : inner;
}

cplx Certificate::arg_p() const {
  if (const auto* g = std::get_if<GeodesicDisc>(&disc)) return g->arg_p;
  if (const auto* e = std::get_if<ExtremalDisc>(&disc)) return e->arg_p;
  throw Error(ErrorCode::InvalidArgument, "certificate carries no disc");
}

cplx Certificate::arg_q() const {
  if (const auto* g = std::get_if<GeodesicDisc>(&disc)) return g->arg_q;
  if (const auto* e = std::get_if<ExtremalDisc>(&disc)) return e->arg_q;
  throw Error(ErrorCode::InvalidArgument, "certificate carries no disc");
}

cplx Certificate::left_inverse_at(const BidiscPoint& x) const {
  const BidiscPoint y = orientation.swap_coordinates ? swap_coordinates(x) : x;
  return std::visit(overloaded{
                        [&](const CoordinateLeftInverse& f) { return mobius_map(f.a, y.x1) * mobius_map(f.b, y.x1); },
                        [&](const LeftInverse& L) { return L(y); },
                        [](std::monostate) -> cplx {
                          throw Error(ErrorCode::InvalidArgument, "certificate carries no left inverse");
                        },
                    },
                    left_inverse);
}

Residuals compute_residuals(const Certificate& cert) {
  Residuals r;
  const cplx ap = cert.arg_p(), aq = cert.arg_q();
  r.interp_p = sup_dist(cert.disc_at(ap), cert.poles.p);
  r.interp_q = sup_dist(cert.disc_at(aq), cert.poles.q);
  r.vanish_p = std::abs(cert.left_inverse_at(cert.poles.p));
  r.vanish_q = std::abs(cert.left_inverse_at(cert.poles.q));
  const double cara = std::log(std::abs(cert.left_inverse_at({})));
  const double lempert = std::log(std::abs(ap * aq));
  r.value_gap = std::max(std::abs(cara - cert.value), std::abs(lempert - cert.value));
  return r;
}

Certificate omega1_solve(const PolePair& pair, double eps) {
  const Classification cls = classify(pair, eps);
  if (!is_omega1(cls.region)) throw Error(ErrorCode::InvalidArgument, "pair is not in U or sigma(U)");

  Certificate cert;
  cert.region = cls.region;
  cert.poles = pair;
  cert.orientation.swap_coordinates = cls.region == Region::SigmaU;
  const PolePair a = orient(pair, cert.orientation);

  // Disc z -> (z, z psi(z)) with psi(p1) = p2/p1, psi(q1) = q2/q1; left inverse m_{p1} m_{q1} in x1.
  const PickDatum datum(DiscPoint(a.p.x1), DiscPoint(a.q.x1), DiscPoint(a.p.x2 / a.p.x1),
                        DiscPoint(a.q.x2 / a.q.x1));
  cert.disc = GeodesicDisc{pick_interpolant(datum), a.p.x1, a.q.x1};
  cert.left_inverse = CoordinateLeftInverse{a.p.x1, a.q.x1};
  cert.value = std::log(std::abs(a.p.x1 * a.q.x1));
  cert.residuals = compute_residuals(cert);
  return cert;
}

Certificate omega2_solve(const PolePair& pair, const SolverConfig& config) {
  const Classification cls = classify(pair, config.eps);
  if (!is_omega2(cls.region)) throw Error(ErrorCode::InvalidArgument, "pair is not in E1..E4");

  // Coordinate order first for E1/E2, swapped for E3/E4; pole order is tried both ways.
  const bool sigma_first = cls.region == Region::E3 || cls.region == Region::E4;
  const std::array<Orientation, 4> orientations = {{
      {sigma_first, false},
      {sigma_first, true},
      {!sigma_first, false},
      {!sigma_first, true},
  }};

  SolveStats stats;
  stats.seed = config.seed;
  for (std::size_t oi = 0; oi < orientations.size(); ++oi) {
    const Orientation& o = orientations[oi];
    ++stats.orientation_tries;
    const auto inv = invert_big_phi(orient(pair, o), derive_seed(config.seed, 0x0e1 + oi), config.inversion,
                                    config.exec);
    if (!inv) {
      stats.starts_run += config.inversion.starts;
      continue;
    }
    stats.starts_run += inv->starts_run;
    stats.iterations += inv->iterations;

    const ExtremalParams& P = inv->params;
    Certificate cert;
    cert.region = cls.region;
    cert.poles = pair;
    cert.orientation = o;
    const cplx first = P.c, second = P.partner();
    cert.disc = ExtremalDisc{P, o.swap_poles ? second : first, o.swap_poles ? first : second};
    cert.left_inverse = certified_left_inverse(P);
    cert.value = omega2_value(P);
    cert.residuals = compute_residuals(cert);
    cert.stats = stats;
    if (cert.residuals.max() < kCertificateTol) return cert;
  }
  throw Error(ErrorCode::NoConvergence, "multistart budget exhausted in every orientation");
}

Certificate thin_set_fallback(const Problem& problem, const SolverConfig& config) {
  problem.validate();
  const PolePair pair = problem.normalized();
  const Classification cls = classify(pair, config.eps);
  if (cls.region == Region::Diagonal) throw Error(ErrorCode::DiagonalPoles, "p = q");
  if (cls.region == Region::PoleAtBase) throw Error(ErrorCode::PoleAtBase, "pole at the base point");

  const double delta = config.fallback_delta;
  Rng rng(derive_seed(config.seed, 0xfa11));
  FallbackRecord rec;
  rec.delta = delta;
  Residuals worst;
  SolveStats stats;
  stats.seed = config.seed;

  auto solve_generic = [&](const PolePair& pr, Region& region) -> std::optional<Certificate> {
    if (!in_bidisc(pr.p) || !in_bidisc(pr.q)) return std::nullopt;
    region = classify(pr, config.eps).region;
    try {
      if (is_omega1(region)) return omega1_solve(pr, config.eps);
      if (is_omega2(region)) return omega2_solve(pr, config);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
    }
    return std::nullopt;
  };

  std::array<double, 2> extrapolated{};
  int accepted = 0;
  constexpr int kDirectionAttempts = 16;
  for (int attempt = 0; attempt < kDirectionAttempts && accepted < 2; ++attempt) {
    std::array<cplx, 4> d;
    for (auto& v : d) v = rng.on_circle();
    std::array<Certificate, 2> certs;
    std::array<Region, 2> regions{};
    bool ok = true;
    for (int h = 0; h < 2 && ok; ++h) {
      const auto c = solve_generic(shifted(pair, d, h == 0 ? delta : delta / 2), regions[h]);
      if (!c || !c->valid()) ok = false;
      else certs[h] = *c;
    }
    if (!ok) continue;
    for (int h = 0; h < 2; ++h) {
      rec.values[2 * accepted + h] = certs[h].value;
      rec.regions[2 * accepted + h] = regions[h];
      const Residuals& r = certs[h].residuals;
      worst.interp_p = std::max(worst.interp_p, r.interp_p);
      worst.interp_q = std::max(worst.interp_q, r.interp_q);
      worst.vanish_p = std::max(worst.vanish_p, r.vanish_p);
      worst.vanish_q = std::max(worst.vanish_q, r.vanish_q);
      stats.orientation_tries += certs[h].stats.orientation_tries;
      stats.starts_run += certs[h].stats.starts_run;
      stats.iterations += certs[h].stats.iterations;
    }
    // First-order Richardson step along each direction.
    extrapolated[accepted] = 2.0 * certs[1].value - certs[0].value;
    ++accepted;
  }
  if (accepted < 2) throw Error(ErrorCode::NoConvergence, "perturbed problems could not be certified");

  rec.extrapolated = 0.5 * (extrapolated[0] + extrapolated[1]);
  rec.spread = std::abs(extrapolated[0] - extrapolated[1]);
  worst.value_gap = rec.spread;

  Certificate cert;
  cert.region = cls.region;
  cert.status = CertificateStatus::Fallback;
  cert.value = rec.extrapolated;
  cert.base = problem.z;
  cert.poles = pair;
  cert.residuals = worst;
  cert.fallback = rec;
  cert.stats = stats;
  return cert;
}

Certificate solve(const Problem& problem, const SolverConfig& config) {
  problem.validate();
  const PolePair pair = problem.normalized();
  const Classification cls = classify(pair, config.eps);

  Certificate cert;
  switch (cls.region) {
    case Region::Diagonal: throw Error(ErrorCode::DiagonalPoles, "p = q");
    case Region::PoleAtBase: throw Error(ErrorCode::PoleAtBase, "pole at the base point");
    case Region::U:
    case Region::SigmaU: cert = omega1_solve(pair, config.eps); break;
    case Region::E1:
    case Region::E2:
    case Region::E3:
    case Region::E4: cert = omega2_solve(pair, config); break;
    case Region::ThinA:
    case Region::BoundaryBand: return thin_set_fallback(problem, config);
  }
  cert.base = problem.z;
  cert.stats.seed = config.seed;
  return cert;
}

}  // namespace bidisc
