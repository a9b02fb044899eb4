#pragma once

#include <optional>
#include <string_view>

#include "bidisc/types.hpp"

namespace bidisc {

inline constexpr double kDefaultRegionEps = 1e-9;
/// Coincidence tolerance for DIAGONAL and POLE_AT_BASE.
inline constexpr double kCoincidenceTol = 1e-15;

enum class Region { Diagonal, PoleAtBase, ThinA, U, SigmaU, E1, E2, E3, E4, BoundaryBand };

std::string_view to_string(Region r) noexcept;
std::optional<Region> region_from_string(std::string_view s) noexcept;

/// Region label and the smallest slack among the inequalities that decided it.
struct Classification {
  Region region;
  double margin;
};

/// Decision tree over a normalized pole pair (base point at the origin).
/// Throws Error(InvalidPoint) if a coordinate is outside the disc.
Classification classify(const PolePair& pair, double eps = kDefaultRegionEps);

/// ((p2,p1),(q2,q1)).
inline PolePair sigma(const PolePair& pair) noexcept {
  return {{pair.p.x2, pair.p.x1}, {pair.q.x2, pair.q.x1}};
}
inline BidiscPoint swap_coordinates(const BidiscPoint& x) noexcept { return {x.x2, x.x1}; }
inline PolePair swap_poles(const PolePair& pair) noexcept { return {pair.q, pair.p}; }

/// Label of sigma(pair) given the label of pair.
Region sigma_label(Region r) noexcept;

inline bool is_omega1(Region r) noexcept { return r == Region::U || r == Region::SigmaU; }
inline bool is_omega2(Region r) noexcept {
  return r == Region::E1 || r == Region::E2 || r == Region::E3 || r == Region::E4;
}
inline bool is_generic(Region r) noexcept { return is_omega1(r) || is_omega2(r); }

}  // namespace bidisc
