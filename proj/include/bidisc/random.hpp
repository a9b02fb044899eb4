#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "bidisc/types.hpp"

namespace bidisc {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2015'0001ULL;

/// splitmix64 finalizer; derives independent stream seeds from (base, stream).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Conversions are done by hand so draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  cplx on_circle() { return std::polar(1.0, angle()); }
  /// Area-uniform point in the disc of the given radius.
  cplx in_disc(double radius = 1.0) {
    for (;;) {
      const cplx z = std::polar(radius * std::sqrt(uniform()), angle());
      if (std::abs(z) < kDiscBound) return z;
    }
  }
  BidiscPoint in_bidisc(double radius = 1.0) { return {in_disc(radius), in_disc(radius)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bidisc
