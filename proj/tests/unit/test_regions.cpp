#include <doctest.h>

#include <cmath>

#include "bidisc/error.hpp"
#include "bidisc/mobius.hpp"
#include "bidisc/random.hpp"
#include "bidisc/regions.hpp"

using namespace bidisc;

namespace {

PolePair pair(cplx p1, cplx p2, cplx q1, cplx q2) { return {{p1, p2}, {q1, q2}}; }

// The defining inequalities, written out again for an independent check.
struct Membership {
  bool u, sigma_u, f1, f2, f3, f4;
};

Membership membership(const PolePair& pr) {
  const auto& [p, q] = pr;
  const double a1 = std::abs(p.x1), a2 = std::abs(p.x2), b1 = std::abs(q.x1), b2 = std::abs(q.x2);
  auto ratio_gap = [](cplx x1, cplx x2, cplx y1, cplx y2) {
    return mobius_dist(x1, y1) - mobius_dist(x2 / x1, y2 / y1);
  };
  Membership m{};
  if (a2 < a1 && b2 < b1) {
    const double g = ratio_gap(p.x1, p.x2, q.x1, q.x2);
    m.u = g > 0;
    m.f2 = g < 0;
  }
  if (a1 < a2 && b1 < b2) {
    const double g = ratio_gap(p.x2, p.x1, q.x2, q.x1);
    m.sigma_u = g > 0;
    m.f4 = g < 0;
  }
  m.f1 = a2 > a1 && b2 < b1;
  m.f3 = a1 > a2 && b1 < b2;
  return m;
}

}  // namespace

TEST_CASE("classify hand examples") {
  CHECK(classify(pair(0.5, 0.1, -0.5, 0.05)).region == Region::U);
  CHECK(classify(pair(0.1, 0.5, 0.5, 0.1)).region == Region::E1);
  CHECK(classify(pair(0.5, 0.4, 0.6, -0.5)).region == Region::E2);
  CHECK(classify(pair(0.3, 0.2, 0.3, 0.2)).region == Region::Diagonal);
  CHECK(classify(pair(0.0, 0.0, 0.3, 0.2)).region == Region::PoleAtBase);
  CHECK(classify(pair(0.3, 0.2, 0.3, -0.4)).region == Region::ThinA);
}

TEST_CASE("classify margin is the smallest deciding slack") {
  // U: |p2|<|p1| by 0.4, |q2|<|q1| by 0.45, distance gap 0.8 - 0.294..., thin gap 0.05.
  const auto c = classify(pair(0.5, 0.1, -0.5, 0.05));
  CHECK(std::abs(c.margin - 0.05) < 1e-15);
}

TEST_CASE("classify rejects points outside the bidisc") {
  try {
    (void)classify(pair(1.2, 0.1, 0.3, 0.0));
    FAIL("expected INVALID_POINT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPoint);
  }
}

TEST_CASE("region tags round-trip through their names") {
  for (const Region r : {Region::Diagonal, Region::PoleAtBase, Region::ThinA, Region::U, Region::SigmaU, Region::E1,
                         Region::E2, Region::E3, Region::E4, Region::BoundaryBand}) {
    const auto back = region_from_string(to_string(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK(to_string(Region::SigmaU) == "SIGMA_U");
  CHECK(to_string(Region::BoundaryBand) == "BOUNDARY_BAND");
  CHECK_FALSE(region_from_string("E5").has_value());
}

TEST_CASE("sigma is a coordinate swap and an involution") {
  const PolePair pr = pair({0.1, 0.2}, {0.3, -0.4}, {-0.5, 0.1}, {0.0, 0.6});
  const PolePair s = sigma(pr);
  CHECK(s.p.x1 == pr.p.x2);
  CHECK(s.p.x2 == pr.p.x1);
  CHECK(s.q.x1 == pr.q.x2);
  CHECK(s.q.x2 == pr.q.x1);
  const PolePair ss = sigma(s);
  CHECK(sup_dist(ss.p, pr.p) == 0.0);
  CHECK(sup_dist(ss.q, pr.q) == 0.0);
}

TEST_CASE("labels are exclusive, agree with the inequalities and permute under sigma") {
  Rng rng(derive_seed(kDefaultSeed, 31));
  int disagreements = 0, multiple = 0, sigma_failures = 0, generic = 0;
  constexpr int n = 100000;
  for (int k = 0; k < n; ++k) {
    const PolePair pr{rng.in_bidisc(), rng.in_bidisc()};
    const Region r = classify(pr, 1e-6).region;
    if (is_generic(r)) ++generic;
    const Membership m = membership(pr);
    const int hits = m.u + m.sigma_u + m.f1 + m.f2 + m.f3 + m.f4;
    if (hits > 1) ++multiple;
    const bool agrees = (r == Region::U && m.u) || (r == Region::SigmaU && m.sigma_u) || (r == Region::E1 && m.f1) ||
                        (r == Region::E2 && m.f2) || (r == Region::E3 && m.f3) || (r == Region::E4 && m.f4) ||
                        !is_generic(r);
    if (!agrees) ++disagreements;
    if (classify(sigma(pr), 1e-6).region != sigma_label(r)) ++sigma_failures;
  }
  CHECK(multiple == 0);
  CHECK(disagreements == 0);
  CHECK(sigma_failures == 0);
  CHECK(static_cast<double>(generic) / n >= 0.99);
}

TEST_CASE("sigma_label permutes the generic tags and fixes the rest") {
  CHECK(sigma_label(Region::U) == Region::SigmaU);
  CHECK(sigma_label(Region::SigmaU) == Region::U);
  CHECK(sigma_label(Region::E1) == Region::E3);
  CHECK(sigma_label(Region::E3) == Region::E1);
  CHECK(sigma_label(Region::E2) == Region::E4);
  CHECK(sigma_label(Region::E4) == Region::E2);
  CHECK(sigma_label(Region::ThinA) == Region::ThinA);
  CHECK(sigma_label(Region::BoundaryBand) == Region::BoundaryBand);
}
