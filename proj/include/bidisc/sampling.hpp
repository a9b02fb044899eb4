#pragma once

#include "bidisc/extremal.hpp"
#include "bidisc/random.hpp"
#include "bidisc/regions.hpp"

namespace bidisc {

/// Random three-extremal parameters: alpha, beta, c in the disc of radius r, t in (0.05, 0.95).
inline ExtremalParams random_extremal_params(Rng& rng, double r = 0.95) {
  ExtremalParams P;
  P.alpha = rng.in_disc(r);
  P.beta = rng.in_disc(r);
  P.c = rng.in_disc(r);
  P.omega = rng.on_circle();
  P.t = rng.uniform(0.05, 0.95);
  return P;
}

/// Parameters whose image under big_phi lies in `want` with margin eps.
inline ExtremalParams random_params_in(Rng& rng, Region want, double eps = 1e-3) {
  for (;;) {
    const ExtremalParams P = random_extremal_params(rng);
    if (std::abs(P.alpha - P.beta) < 1e-3 || std::abs(P.partner() - P.c) < 1e-3) continue;
    if (classify(big_phi(P), eps).region == want) return P;
  }
}

/// Area-uniform pole pair whose label is in U, sigma(U) or E1..E4 with margin eps.
inline PolePair random_generic_pair(Rng& rng, double eps = 1e-3) {
  for (;;) {
    const PolePair pr{rng.in_bidisc(), rng.in_bidisc()};
    if (is_generic(classify(pr, eps).region)) return pr;
  }
}

}  // namespace bidisc
