#include <doctest.h>

#include <cmath>

#include "bidisc/error.hpp"
#include "bidisc/oracle.hpp"
#include "bidisc/proposition.hpp"
#include "bidisc/sampling.hpp"
#include "bidisc/solver.hpp"

using namespace bidisc;

namespace {

ExtremalParams fixture() {
  ExtremalParams P;
  P.alpha = {0.31, -0.42};
  P.beta = {-0.27, 0.18};
  P.c = {0.46, 0.22};
  P.omega = std::polar(1.0, 0.7);
  P.t = 0.37;
  return P;
}

ErrorCode code_of(const auto& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("closed form on U") {
  const Problem pb{{}, {0.5, 0.1}, {-0.5, 0.05}};
  const Certificate cert = solve(pb);
  CHECK(cert.region == Region::U);
  CHECK(cert.valid());
  CHECK(cert.has_witnesses());
  CHECK(std::abs(cert.value - std::log(0.25)) < 1e-15);
  CHECK(cert.residuals.max() < 1e-13);
  CHECK(sup_dist(cert.disc_at(0.0), BidiscPoint{}) < 1e-15);
  // The witnesses live in normalized coordinates, where the base point is the origin.
  CHECK(sup_dist(cert.disc_at(cert.arg_p()), cert.poles.p) < 1e-13);
  CHECK(sup_dist(cert.disc_at_original(cert.arg_p()), pb.p) < 1e-13);
  CHECK(sup_dist(cert.disc_at_original(cert.arg_q()), pb.q) < 1e-13);
  CHECK(std::abs(cert.left_inverse_at_original(pb.p)) < 1e-13);
  CHECK(std::abs(cert.left_inverse_at_original(pb.q)) < 1e-13);
}

TEST_CASE("inversion recovers the pinned fixture") {
  const ExtremalParams P = fixture();
  const PolePair pr = big_phi(P);
  const Certificate cert = solve(Problem{{}, pr.p, pr.q});
  REQUIRE(cert.valid());
  CHECK(is_omega2(cert.region));
  CHECK(std::abs(cert.value - (-1.2555817241390096833)) < 1e-10);
  CHECK(sup_dist(cert.disc_at_original(cert.arg_p()), pr.p) < 1e-10);
  CHECK(sup_dist(cert.disc_at_original(cert.arg_q()), pr.q) < 1e-10);
}

TEST_CASE("E1 hand example certifies") {
  const Problem pb{{}, {0.1, 0.5}, {0.5, 0.1}};
  const Certificate cert = solve(pb);
  CHECK(cert.region == Region::E1);
  CHECK(cert.valid());
  // Never below the coordinate bound, never above the geodesic bound.
  CHECK(cert.value >= oracle_detail::family_a_lower(pb.normalized()).value - 1e-12);
}

TEST_CASE("input errors") {
  CHECK(code_of([] { (void)solve(Problem{{}, {0.3, 0.2}, {0.3, 0.2}}); }) == ErrorCode::DiagonalPoles);
  CHECK(code_of([] { (void)solve(Problem{{}, {0.0, 0.0}, {0.3, 0.2}}); }) == ErrorCode::PoleAtBase);
  CHECK(code_of([] { (void)solve(Problem{{0.2, 0.1}, {0.2, 0.1}, {0.3, 0.2}}); }) == ErrorCode::PoleAtBase);
  CHECK(code_of([] { (void)solve(Problem{{}, {1.0, 0.0}, {0.3, 0.2}}); }) == ErrorCode::InvalidPoint);
}

TEST_CASE("value is symmetric in the poles and the coordinates") {
  Rng rng(derive_seed(kDefaultSeed, 51));
  for (int k = 0; k < 20; ++k) {
    const PolePair pr = random_generic_pair(rng);
    const double v = solve(Problem{{}, pr.p, pr.q}).value;
    CHECK(std::abs(solve(Problem{{}, pr.q, pr.p}).value - v) < 1e-9);
    const PolePair s = sigma(pr);
    CHECK(std::abs(solve(Problem{{}, s.p, s.q}).value - v) < 1e-9);
  }
}

TEST_CASE("proposition returns the sign pair and rejects a wrong product") {
  Rng rng(derive_seed(kDefaultSeed, 52));
  int matched = 0, rejected = 0;
  for (int k = 0; k < 20; ++k) {
    const ExtremalParams P = random_params_in(rng, k % 2 ? Region::E2 : Region::E1);
    const PolePair pr = big_phi(P);
    const auto cands = proposition_refine(pr, P.c * P.partner(), P.omega);
    bool plus = false, minus = false;
    for (const auto& c : cands) {
      plus = plus || std::abs(c.alpha - P.alpha) + std::abs(c.beta - P.beta) + std::abs(c.c - P.c) < 1e-7;
      minus = minus || std::abs(c.alpha + P.alpha) + std::abs(c.beta + P.beta) + std::abs(c.c + P.c) < 1e-7;
    }
    if (plus && minus) ++matched;

    // A random product: either nothing survives, or the survivors do not reproduce the poles.
    const cplx l = rng.in_disc(0.9);
    try {
      bool reproduces = false;
      for (const auto& c : proposition_refine(pr, l, P.omega)) {
        ExtremalParams Q = P;
        Q.alpha = c.alpha;
        Q.beta = c.beta;
        Q.c = c.c;
        if (std::abs(Q.alpha) < 1 && std::abs(Q.beta) < 1 && std::abs(Q.c) < 1 && std::abs(Q.c * Q.partner() - l) < 1e-8) {
          const PolePair back = big_phi(Q);
          reproduces = reproduces || std::max(sup_dist(back.p, pr.p), sup_dist(back.q, pr.q)) < 1e-8;
        }
      }
      if (!reproduces) ++rejected;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoCandidate);
      ++rejected;
    }
  }
  CHECK(matched == 20);
  CHECK(rejected == 20);
}

TEST_CASE("fallback on the thin set") {
  const Problem pb{{}, {0.3, 0.2}, {0.3, -0.4}};
  const Certificate cert = solve(pb);
  CHECK(cert.region == Region::ThinA);
  CHECK(cert.status == CertificateStatus::Fallback);
  CHECK_FALSE(cert.valid());
  REQUIRE(cert.fallback.has_value());
  CHECK(cert.fallback->spread < 1e-5);
  CHECK(std::isfinite(cert.value));
}

TEST_CASE("fallback is never used for coincident poles") {
  CHECK(code_of([] { (void)thin_set_fallback(Problem{{}, {0.3, 0.2}, {0.3, 0.2}}); }) == ErrorCode::DiagonalPoles);
}

TEST_CASE("fallback at an interior point of U agrees with the closed form") {
  const Problem pb{{}, {0.5, 0.1}, {-0.5, 0.05}};
  const Certificate fb = thin_set_fallback(pb);
  CHECK(std::abs(fb.value - std::log(0.25)) < 1e-6);
}

TEST_CASE("serial and parallel inversion agree bit for bit; seeds are deterministic") {
  Rng rng(derive_seed(kDefaultSeed, 53));
  for (int k = 0; k < 10; ++k) {
    const PolePair pr = big_phi(random_params_in(rng, k % 2 ? Region::E2 : Region::E1));
    SolverConfig serial;
    serial.exec = Exec::serial;
    const Certificate a = solve(Problem{{}, pr.p, pr.q}, serial);
    const Certificate b = solve(Problem{{}, pr.p, pr.q});
    const Certificate c = solve(Problem{{}, pr.p, pr.q});
    CHECK(a.value == b.value);
    CHECK(b.value == c.value);
    CHECK(a.stats.starts_run == b.stats.starts_run);
    CHECK(a.residuals.max() == b.residuals.max());
  }
}

TEST_CASE("value sits inside the monotone bounds") {
  Rng rng(derive_seed(kDefaultSeed, 54));
  for (int k = 0; k < 50; ++k) {
    const PolePair pr = random_generic_pair(rng);
    const double v = solve(Problem{{}, pr.p, pr.q}).value;
    CHECK(v >= oracle_detail::family_a_lower(pr).value - 1e-10);
    CHECK(v <= oracle_detail::family_a_upper(pr).value + 1e-10);
    CHECK(v < 0.0);
  }
}
