#include "bidisc/pick1d.hpp"

#include "bidisc/mobius.hpp"

namespace bidisc {

PickDatum::PickDatum(DiscPoint n1, DiscPoint n2, DiscPoint t1, DiscPoint t2)
    : node1(n1), node2(n2), target1(t1), target2(t2) {
  if (n1.value() == n2.value()) throw Error(ErrorCode::InvalidArgument, "Pick nodes coincide");
}

bool pick_solvable(const PickDatum& d) noexcept {
  return mobius_dist(d.target1, d.target2) <= mobius_dist(d.node1, d.node2) + kPickTol;
}

cplx PickInterpolant::operator()(cplx z) const noexcept {
  return mobius_map(target1_, eta_ * mobius_map(node1_, z));
}

PickInterpolant pick_interpolant(const PickDatum& d) {
  if (!pick_solvable(d)) throw Error(ErrorCode::NotSolvable, "Pick condition fails");
  cplx eta{};
  if (d.target1.value() != d.target2.value()) {
    eta = mobius_map(d.target1, d.target2) / mobius_map(d.node1, d.node2);
    // Within the solvability tolerance |eta| may exceed 1 by rounding.
    if (std::abs(eta) > 1.0) eta /= std::abs(eta);
  }
  return PickInterpolant(d.node1, d.target1, eta);
}

}  // namespace bidisc
