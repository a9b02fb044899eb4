#include <doctest.h>

#include <cmath>

#include "bidisc/error.hpp"
#include "bidisc/mobius.hpp"
#include "bidisc/pick1d.hpp"
#include "bidisc/random.hpp"

using namespace bidisc;

namespace {
PickDatum datum(cplx n1, cplx n2, cplx t1, cplx t2) {
  return PickDatum{DiscPoint(n1), DiscPoint(n2), DiscPoint(t1), DiscPoint(t2)};
}
}  // namespace

TEST_CASE("equal targets give the constant interpolant") {
  const cplx w{0.3, 0.4};
  const auto d = datum(0.1, -0.6, w, w);
  REQUIRE(pick_solvable(d));
  const PickInterpolant psi = pick_interpolant(d);
  CHECK(psi.eta() == cplx(0.0));
  for (const cplx z : {cplx(0.0), cplx(0.5, -0.5), cplx(-0.9, 0.1)}) CHECK(std::abs(psi(z) - w) < 1e-15);
}

TEST_CASE("hand-computed solvable datum") {
  const auto d = datum(0.5, -0.5, 0.2, -0.1);
  REQUIRE(pick_solvable(d));
  const PickInterpolant psi = pick_interpolant(d);
  // eta = m(0.2, -0.1) / m(0.5, -0.5) = (0.3/1.02) / 0.8 up to its sign.
  CHECK(std::abs(std::abs(psi.eta()) - 0.3 / 1.02 / 0.8) < 1e-15);
  CHECK(std::abs(std::abs(psi.eta()) - 0.367647058823529) < 1e-12);
  CHECK(std::abs(psi(0.5) - 0.2) < 1e-14);
  CHECK(std::abs(psi(-0.5) + 0.1) < 1e-14);
}

TEST_CASE("hand-computed unsolvable datum") {
  const auto d = datum(0.5, 0.6, 0.8, -0.8333);
  CHECK(std::abs(mobius_dist(0.8, -0.8333) - 0.98) < 1e-3);
  CHECK(std::abs(mobius_dist(0.5, 0.6) - 0.1 / 0.7) < 1e-15);
  CHECK_FALSE(pick_solvable(d));
  try {
    (void)pick_interpolant(d);
    FAIL("expected NOT_SOLVABLE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSolvable);
  }
}

TEST_CASE("equal nodes are rejected") {
  CHECK_THROWS_AS(datum(0.2, 0.2, 0.1, 0.3), Error);
}

TEST_CASE("extremal datum gives an automorphism") {
  // Targets are the image of the nodes under an automorphism, so the distances agree.
  const cplx a{0.2, 0.1};
  const cplx n1{0.4, -0.3}, n2{-0.5, 0.2};
  const auto d = datum(n1, n2, mobius_map(a, n1), mobius_map(a, n2));
  REQUIRE(pick_solvable(d));
  const PickInterpolant psi = pick_interpolant(d);
  CHECK(psi.is_automorphism());
  Rng rng(derive_seed(kDefaultSeed, 21));
  for (int k = 0; k < 100; ++k) CHECK(std::abs(std::abs(psi(rng.on_circle())) - 1.0) < 1e-12);
}

TEST_CASE("random solvable data: interpolation and Schur property") {
  Rng rng(derive_seed(kDefaultSeed, 22));
  double worst_res = 0.0, worst_sup = 0.0;
  int solved = 0;
  while (solved < 10000) {
    const cplx n1 = rng.in_disc(0.95), n2 = rng.in_disc(0.95), t1 = rng.in_disc(0.95), t2 = rng.in_disc(0.95);
    if (mobius_dist(n1, n2) < 1e-6) continue;
    const auto d = datum(n1, n2, t1, t2);
    if (!pick_solvable(d)) continue;
    ++solved;
    const PickInterpolant psi = pick_interpolant(d);
    worst_res = std::max({worst_res, std::abs(psi(n1) - t1), std::abs(psi(n2) - t2)});
    if (solved % 10 == 0)
      for (int k = 0; k < 1000; ++k) worst_sup = std::max(worst_sup, std::abs(psi(rng.in_disc())));
  }
  CHECK(worst_res < 1e-13);
  CHECK(worst_sup < 1.0);
}
