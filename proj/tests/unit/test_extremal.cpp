#include <doctest.h>

#include <cmath>

#include "bidisc/error.hpp"
#include "bidisc/extremal.hpp"
#include "bidisc/sampling.hpp"
#include "bidisc/selftest.hpp"

using namespace bidisc;

namespace {

// Written out independently of the library's inline helpers.
cplx disc_aut(cplx a, cplx z) { return (a - z) / (1.0 - std::conj(a) * z); }

BidiscPoint disc_map(cplx alpha, cplx beta, cplx omega, cplx z) {
  return {omega * z * disc_aut(alpha, z), z * disc_aut(beta, z)};
}

ExtremalParams fixture() {
  ExtremalParams P;
  P.alpha = {0.31, -0.42};
  P.beta = {-0.27, 0.18};
  P.c = {0.46, 0.22};
  P.omega = std::polar(1.0, 0.7);
  P.t = 0.37;
  return P;
}

}  // namespace

TEST_CASE("gamma interpolates alpha and beta") {
  CHECK(gamma(cplx(1.0, 0.0), cplx(0.0, 1.0), 0.25) == cplx(0.25, 0.75));
  CHECK(gamma(cplx(0.4, 0.2), cplx(-0.2, 0.0), 1.0) == cplx(0.4, 0.2));
  CHECK(gamma(cplx(0.4, 0.2), cplx(-0.2, 0.0), 0.0) == cplx(-0.2, 0.0));
  CHECK(std::abs(fixture().gamma() - (0.37 * cplx(0.31, -0.42) + 0.63 * cplx(-0.27, 0.18))) < 1e-16);
}

TEST_CASE("phi hand values") {
  const cplx z{0.3, -0.2};
  const BidiscPoint at0 = phi(0.0, 0.0, 1.0, z);
  CHECK(std::abs(at0.x1 + z * z) < 1e-16);
  CHECK(std::abs(at0.x2 + z * z) < 1e-16);
  const cplx alpha{0.2, 0.5}, beta{-0.1, 0.3};
  const BidiscPoint at_alpha = phi(alpha, beta, std::polar(1.0, 1.1), alpha);
  CHECK(std::abs(at_alpha.x1) < 1e-16);
  CHECK(std::abs(at_alpha.x2 - alpha * disc_aut(beta, alpha)) < 1e-16);
}

TEST_CASE("critical tau") {
  CHECK(std::abs(critical_tau(0.5, 0.2) - 1.0) < 1e-16);
  CHECK(std::abs(critical_tau(cplx(0.0, 0.5), cplx(0.0, 0.1)) + 1.0) < 1e-16);
  CHECK(std::abs(critical_tau(cplx(0.3, 0.4), 0.0) - cplx(-0.28, -0.96)) < 1e-15);
  CHECK(std::abs(std::abs(critical_tau(cplx(0.1, -0.7), cplx(0.6, 0.2))) - 1.0) < 1e-15);
  try {
    (void)critical_tau(0.3, 0.3);
    FAIL("expected DEGENERATE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
}

TEST_CASE("left inverse fixes the origin and is inner on the torus") {
  Rng rng(derive_seed(kDefaultSeed, 41));
  for (int trial = 0; trial < 20; ++trial) {
    const LeftInverse L{rng.uniform(0.0, 1.0), rng.on_circle(), rng.on_circle(), {}};
    CHECK(L(BidiscPoint{}) == cplx(0.0));
    double worst = 0.0;
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        const BidiscPoint x{std::polar(1.0, 2 * M_PI * i / 64), std::polar(1.0, 2 * M_PI * j / 64 + 0.01)};
        const cplx v = L.raw(x);
        if (std::isfinite(std::abs(v))) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
      }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("big_phi on the pinned fixture") {
  // Computed at 30 digits with an independent implementation.
  const PolePair pr = big_phi(fixture());
  CHECK(std::abs(pr.p.x1 - cplx(0.31516691557147553849, -0.12820580168760958869)) < 1e-14);
  CHECK(std::abs(pr.p.x2 - cplx(-0.31767089149223870069, -0.12338852962364342316)) < 1e-14);
  CHECK(std::abs(pr.q.x1 - cplx(-0.32168648615973435328, -0.27572612408613760053)) < 1e-14);
  CHECK(std::abs(pr.q.x2 - cplx(0.050545746798912649425, -0.29246341306465351231)) < 1e-14);
  CHECK(std::abs(omega2_value(fixture()) - (-1.2555817241390096833)) < 1e-14);

  const ExtremalParams P = fixture();
  const cplx second = disc_aut(P.gamma(), P.c);
  CHECK(sup_dist(pr.p, disc_map(P.alpha, P.beta, P.omega, P.c)) < 1e-15);
  CHECK(sup_dist(pr.q, disc_map(P.alpha, P.beta, P.omega, second)) < 1e-15);
}

TEST_CASE("big_phi rejects the fixed point of m_gamma") {
  ExtremalParams P;
  P.alpha = 0.7;
  P.beta = 0.3;
  P.t = 0.5;
  P.c = (1.0 - std::sqrt(0.75)) / 0.5;  // fixed point of m_{1/2}
  try {
    (void)big_phi(P);
    FAIL("expected DIAGONAL_OUTPUT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DiagonalOutput);
  }
}

TEST_CASE("big_phi is invariant under the sign flip") {
  Rng rng(derive_seed(kDefaultSeed, 42));
  for (int k = 0; k < 1000; ++k) {
    const ExtremalParams P = random_extremal_params(rng);
    ExtremalParams Q = P;
    Q.alpha = -P.alpha;
    Q.beta = -P.beta;
    Q.c = -P.c;
    const PolePair a = big_phi(P), b = big_phi(Q);
    CHECK(std::max(sup_dist(a.p, b.p), sup_dist(a.q, b.q)) < 1e-14);
    const ExtremalParams C = canonicalize(P);
    CHECK(C.alpha.real() >= 0.0);
  }
}

TEST_CASE("certified left inverse vanishes at both poles and realizes the value") {
  Rng rng(derive_seed(kDefaultSeed, 43));
  for (int k = 0; k < 1000; ++k) {
    const ExtremalParams P = random_extremal_params(rng);
    if (std::abs(P.alpha - P.beta) < 1e-3 || std::abs(P.partner() - P.c) < 1e-3) continue;
    const LeftInverse G = certified_left_inverse(P);
    const PolePair pr = big_phi(P);
    CHECK(std::abs(G(pr.p)) < 1e-12);
    CHECK(std::abs(G(pr.q)) < 1e-12);
    CHECK(std::abs(std::log(std::abs(G(BidiscPoint{}))) - omega2_value(P)) < 1e-12);
  }
}

TEST_CASE("left inverse identity holds only for the critical tau") {
  const auto critical = [](cplx a, cplx b) { return critical_tau(a, b); };
  const auto negated = [](cplx a, cplx b) { return -critical_tau(a, b); };
  CHECK(left_inverse_identity_error(2000, 10, derive_seed(kDefaultSeed, 44), critical) < 1e-12);
  CHECK(left_inverse_identity_error(2000, 10, derive_seed(kDefaultSeed, 44), negated) > 1e-3);
}

TEST_CASE("origin jet matches finite differences") {
  Rng rng(derive_seed(kDefaultSeed, 45));
  constexpr double h = 1e-5;
  for (int k = 0; k < 200; ++k) {
    const ExtremalParams P = random_extremal_params(rng);
    const cplx tau = k % 2 == 0 ? rng.on_circle() : critical_tau(P.alpha, P.beta);
    const LeftInverse L{P.t, P.omega, tau, {}};
    const auto f = [&](cplx z) { return L.raw(disc_map(P.alpha, P.beta, P.omega, z)) / z; };
    const OriginJet jet = origin_jet(P.alpha, P.beta, P.t, tau);
    const cplx value = 0.5 * (f(h) + f(-h));
    const cplx derivative = (f(h) - f(-h)) / (2 * h);
    CHECK(std::abs(jet.value - value) < 1e-6);
    CHECK(std::abs(jet.derivative - derivative) < 1e-6);
    if (k % 2 == 1) CHECK(std::abs(jet.schwarz_pick_ratio() - 1.0) < 1e-10);
  }
}
