#include "bidisc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace bidisc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepRow evaluate_cell(const SweepSpec& spec, int i, int j) {
  SweepRow row;
  row.i = i;
  row.j = j;
  row.coords = spec.fixed;
  row.coords[static_cast<std::size_t>(spec.x.coord)] = spec.x.at(i);
  row.coords[static_cast<std::size_t>(spec.y.coord)] = spec.y.at(j);
  row.value_log = kNaN;
  row.residual_max = kNaN;
  row.sandwich_width = kNaN;

  const auto& c = row.coords;
  const Problem problem{spec.z, {{c[0], c[1]}, {c[2], c[3]}}, {{c[4], c[5]}, {c[6], c[7]}}};
  if (!in_bidisc(problem.p) || !in_bidisc(problem.q)) {
    row.region = "INVALID";
    row.note = "INVALID_POINT";
    return row;
  }
  const PolePair pair = problem.normalized();
  row.region = std::string(to_string(classify(pair, spec.solver.eps).region));
  try {
    const Certificate cert = solve(problem, spec.solver);
    row.value_log = cert.value;
    row.residual_max = cert.residuals.max();
    if (cert.status == CertificateStatus::Fallback) row.note = "FALLBACK";
  } catch (const Error& e) {
    row.note = std::string(to_string(e.code()));
    return row;
  }
  if (spec.oracle) {
    try {
      row.sandwich_width = sandwich(pair, spec.budget).width();
    } catch (const Error& e) {
      row.note = std::string(to_string(e.code()));
    }
  }
  return row;
}

void put(std::ostream& os, double v) {
  if (std::isnan(v)) {
    os << "nan";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

int coord_index(std::string_view name) {
  for (std::size_t k = 0; k < kCoordNames.size(); ++k)
    if (kCoordNames[k] == name) return static_cast<int>(k);
  return -1;
}

void SweepSpec::validate() const {
  for (const SweepAxis* a : {&x, &y}) {
    if (a->coord < 0 || a->coord > 7) throw Error(ErrorCode::InvalidArgument, "sweep axis coordinate out of range");
    if (a->n < 2) throw Error(ErrorCode::InvalidArgument, "sweep resolution must be >= 2 per axis");
  }
  if (x.coord == y.coord) throw Error(ErrorCode::InvalidArgument, "sweep axes must differ");
  require_in_bidisc(z, "base point z");
  // Fixed coordinates pair up into complex pole coordinates; check those not swept.
  for (int k = 0; k < 8; k += 2) {
    const bool swept = x.coord / 2 == k / 2 || y.coord / 2 == k / 2;
    if (!swept && !(std::abs(cplx(fixed[static_cast<std::size_t>(k)], fixed[static_cast<std::size_t>(k + 1)])) < kDiscBound))
      throw Error(ErrorCode::InvalidPoint, "fixed coordinate outside the disc");
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Exec exec) {
  spec.validate();
  const int nx = spec.x.n, ny = spec.y.n;
  std::vector<SweepRow> rows(static_cast<std::size_t>(nx * ny));
  // Each cell runs its own serial solve; parallelism is across cells only.
  SweepSpec inner = spec;
  inner.solver.exec = Exec::serial;
  inner.budget.exec = Exec::serial;
  if (exec == Exec::serial) {
    for (int k = 0; k < nx * ny; ++k) rows[static_cast<std::size_t>(k)] = evaluate_cell(inner, k / ny, k % ny);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < nx * ny; ++k) rows[static_cast<std::size_t>(k)] = evaluate_cell(inner, k / ny, k % ny);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    os << r.i << ',' << r.j;
    for (const double c : r.coords) {
      os << ',';
      put(os, c);
    }
    os << ',' << r.region << ',';
    put(os, r.value_log);
    os << ',';
    put(os, r.residual_max);
    os << ',';
    put(os, r.sandwich_width);
    os << ',' << r.note << '\n';
  }
}

}  // namespace bidisc
