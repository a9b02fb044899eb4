#include "bidisc/regions.hpp"

#include <algorithm>
#include <array>

#include "bidisc/mobius.hpp"

namespace bidisc {

namespace {

constexpr std::array<std::pair<Region, std::string_view>, 10> kNames = {{
    {Region::Diagonal, "DIAGONAL"},
    {Region::PoleAtBase, "POLE_AT_BASE"},
    {Region::ThinA, "THIN_A"},
    {Region::U, "U"},
    {Region::SigmaU, "SIGMA_U"},
    {Region::E1, "E1"},
    {Region::E2, "E2"},
    {Region::E3, "E3"},
    {Region::E4, "E4"},
    {Region::BoundaryBand, "BOUNDARY_BAND"},
}};

// Slacks of the defining inequalities; a test passes when all its slacks exceed eps.
struct Slacks {
  double u = -1, sigma_u = -1, e1 = -1, e2 = -1, e3 = -1, e4 = -1;
};

// The Mobius test for "both second coordinates smaller": m(p2/p1, q2/q1) vs m(p1, q1).
// Returns (slack for U, slack for F2) or -1 when the ratio test is undefined.
std::pair<double, double> ratio_slacks(cplx a1, cplx a2, cplx b1, cplx b2) {
  if (a1 == 0.0 || b1 == 0.0) return {-1.0, -1.0};
  const double lhs = mobius_dist(a2 / a1, b2 / b1);
  const double rhs = mobius_dist(a1, b1);
  return {rhs - lhs, lhs - rhs};
}

Slacks slacks(const PolePair& pr) {
  const auto& [p, q] = pr;
  const double dp = std::abs(p.x1) - std::abs(p.x2);  // > 0: |p2| < |p1|
  const double dq = std::abs(q.x1) - std::abs(q.x2);
  Slacks s;
  const auto [u, f2] = ratio_slacks(p.x1, p.x2, q.x1, q.x2);
  const auto [su, f4] = ratio_slacks(p.x2, p.x1, q.x2, q.x1);
  s.u = std::min({dp, dq, u});
  s.e2 = std::min({dp, dq, f2});
  s.sigma_u = std::min({-dp, -dq, su});
  s.e4 = std::min({-dp, -dq, f4});
  s.e1 = std::min(-dp, dq);
  s.e3 = std::min(dp, -dq);
  return s;
}

}  // namespace

std::string_view to_string(Region r) noexcept {
  for (const auto& [reg, name] : kNames)
    if (reg == r) return name;
  return "UNKNOWN";
}

std::optional<Region> region_from_string(std::string_view s) noexcept {
  for (const auto& [reg, name] : kNames)
    if (name == s) return reg;
  return std::nullopt;
}

Region sigma_label(Region r) noexcept {
  switch (r) {
    case Region::U: return Region::SigmaU;
    case Region::SigmaU: return Region::U;
    case Region::E1: return Region::E3;
    case Region::E3: return Region::E1;
    case Region::E2: return Region::E4;
    case Region::E4: return Region::E2;
    default: return r;
  }
}

Classification classify(const PolePair& pair, double eps) {
  require_in_bidisc(pair.p, "pole p");
  require_in_bidisc(pair.q, "pole q");
  const auto& [p, q] = pair;

  if (sup_dist(p, q) <= kCoincidenceTol) return {Region::Diagonal, sup_dist(p, q)};
  const double np = std::max(std::abs(p.x1), std::abs(p.x2));
  const double nq = std::max(std::abs(q.x1), std::abs(q.x2));
  if (np <= kCoincidenceTol || nq <= kCoincidenceTol) return {Region::PoleAtBase, std::min(np, nq)};

  // E_j excludes the analytic set {p1 = q1} u {p2 = q2}, so it is tested first.
  const double thin = std::min(std::abs(p.x1 - q.x1), std::abs(p.x2 - q.x2));
  if (thin < eps) return {Region::ThinA, thin};

  const Slacks s = slacks(pair);
  const std::array<std::pair<Region, double>, 6> tests = {{
      {Region::U, s.u},
      {Region::SigmaU, s.sigma_u},
      {Region::E1, s.e1},
      {Region::E2, s.e2},
      {Region::E3, s.e3},
      {Region::E4, s.e4},
  }};
  double best = -1e300;
  for (const auto& [region, slack] : tests) {
    if (slack > eps) return {region, std::min(slack, thin)};
    best = std::max(best, slack);
  }
  return {Region::BoundaryBand, best};
}

}  // namespace bidisc
