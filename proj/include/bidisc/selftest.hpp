#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bidisc/types.hpp"

namespace bidisc {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using TauRule = std::function<cplx(cplx alpha, cplx beta)>;

/// Max of |F(phi(z)) - z m_gamma(z)| over n random (alpha, beta, omega, t) and `per` random z,
/// with tau supplied by `rule` (critical_tau for the real thing).
double left_inverse_identity_error(int n, int per, std::uint64_t seed, const TauRule& rule);

/// Runs all invariant suites; sample counts are reduced when quick is set.
std::vector<SuiteResult> run_selftest(bool quick, std::uint64_t seed);

}  // namespace bidisc
