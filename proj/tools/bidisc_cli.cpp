// bidisc: certified two-pole Lempert/Caratheodory values on the bidisc.
//
//   bidisc solve --p RE,IM,RE,IM --q RE,IM,RE,IM [--z ...] [--seed N] [--eps E] [--starts N] [--oracle]
//   bidisc classify --p ... --q ... [--z ...] [--eps E]
//   bidisc sweep --x p1_re --x-range LO,HI --y q1_im --y-range LO,HI --fixed V1,...,V8 --out FILE
//   bidisc selftest [--quick]
//
// Exit codes: 0 valid certificate, 1 invalid input, 2 fallback certificate, 3 no certificate.
// BIDISC_SEED overrides the default seed; BIDISC_THREADS caps the OpenMP thread count.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bidisc/oracle.hpp"
#include "bidisc/selftest.hpp"
#include "bidisc/serialize.hpp"
#include "bidisc/solver.hpp"
#include "bidisc/sweep.hpp"

using bidisc::BidiscPoint;
using bidisc::ErrorCode;
using json = nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitFallback = 2;
constexpr int kExitFailed = 3;

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v))
      throw bidisc::Error(ErrorCode::InvalidArgument, std::string(what) + ": not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != count)
    throw bidisc::Error(ErrorCode::InvalidArgument,
                        std::string(what) + ": expected " + std::to_string(count) + " comma-separated reals");
  return out;
}

BidiscPoint parse_point(const std::string& text, const char* what) {
  const auto v = parse_reals(text, 4, what);
  return {{v[0], v[1]}, {v[2], v[3]}};
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("BIDISC_SEED")) {
    try {
      return std::stoull(s, nullptr, 0);
    } catch (const std::exception&) {
      std::cerr << "ignoring unparsable BIDISC_SEED='" << s << "'\n";
    }
  }
  return bidisc::kDefaultSeed;
}

void apply_thread_cap() {
  if (const char* s = std::getenv("BIDISC_THREADS")) {
    const int n = std::atoi(s);
    if (n > 0) omp_set_num_threads(n);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::NoCandidate:
    case ErrorCode::NoFeasibleDisc:
    case ErrorCode::Degenerate:
    case ErrorCode::DiagonalOutput:
      return kExitFailed;
    default:
      return kExitInvalid;
  }
}

int report_error(const bidisc::Error& e) {
  const json j{{"error", std::string(bidisc::to_string(e.code()))}, {"message", e.what()}};
  std::cout << j.dump() << "\n";
  return exit_code_for(e.code());
}

struct PointArgs {
  std::string z = "0,0,0,0", p, q;
  double eps = bidisc::kDefaultRegionEps;
};

void add_point_options(CLI::App* cmd, PointArgs& a) {
  cmd->add_option("--z", a.z, "base point re,im,re,im")->capture_default_str();
  cmd->add_option("--p", a.p, "first pole re,im,re,im")->required();
  cmd->add_option("--q", a.q, "second pole re,im,re,im")->required();
  cmd->add_option("--eps", a.eps, "region margin")->capture_default_str();
}

int cmd_solve(const PointArgs& a, std::uint64_t seed, int starts, bool with_oracle) {
  bidisc::Problem problem{parse_point(a.z, "--z"), parse_point(a.p, "--p"), parse_point(a.q, "--q")};
  problem.validate();
  if (starts < 1) throw bidisc::Error(ErrorCode::InvalidArgument, "--starts must be positive");

  bidisc::SolverConfig cfg;
  cfg.seed = seed;
  cfg.eps = a.eps;
  cfg.inversion.starts = starts;

  json out;
  out["inputs"] = {{"z", bidisc::to_json(problem.z)},
                   {"p", bidisc::to_json(problem.p)},
                   {"q", bidisc::to_json(problem.q)},
                   {"seed", seed},
                   {"eps", a.eps},
                   {"starts", starts}};
  const bidisc::Certificate cert = bidisc::solve(problem, cfg);
  out["region"] = std::string(bidisc::to_string(cert.region));
  out["value_log"] = cert.value;
  out["value_modulus"] = std::exp(cert.value);
  out["certificate"] = bidisc::to_json(cert);
  if (with_oracle) {
    bidisc::OracleBudget budget;
    budget.seed = seed;
    try {
      out["sandwich"] = bidisc::to_json(bidisc::sandwich(problem.normalized(), budget));
    } catch (const bidisc::Error& e) {
      out["sandwich"] = {{"error", std::string(bidisc::to_string(e.code()))}, {"message", e.what()}};
    }
  }
  std::cout << out.dump(2) << "\n";
  if (cert.status == bidisc::CertificateStatus::Fallback) return kExitFallback;
  return cert.valid() ? kExitValid : kExitFailed;
}

int cmd_classify(const PointArgs& a) {
  const bidisc::Problem problem{parse_point(a.z, "--z"), parse_point(a.p, "--p"), parse_point(a.q, "--q")};
  bidisc::require_in_bidisc(problem.z, "base point");
  const auto c = bidisc::classify(problem.normalized(), a.eps);
  std::cout << bidisc::to_json(c).dump() << "\n";
  return kExitValid;
}

struct SweepArgs {
  std::string x, y, x_range, y_range, fixed, z = "0,0,0,0", out;
  int nx = 16, ny = 16;
  double eps = bidisc::kDefaultRegionEps;
  bool oracle = false;
};

bidisc::SweepAxis make_axis(const std::string& name, const std::string& range, int n, const char* what) {
  const int idx = bidisc::coord_index(name);
  if (idx < 0) throw bidisc::Error(ErrorCode::InvalidArgument, std::string(what) + ": unknown coordinate '" + name + "'");
  const auto r = parse_reals(range, 2, what);
  return {idx, r[0], r[1], n};
}

int cmd_sweep(const SweepArgs& a, std::uint64_t seed) {
  bidisc::SweepSpec spec;
  const auto fixed = parse_reals(a.fixed, 8, "--fixed");
  std::copy(fixed.begin(), fixed.end(), spec.fixed.begin());
  spec.x = make_axis(a.x, a.x_range, a.nx, "--x");
  spec.y = make_axis(a.y, a.y_range, a.ny, "--y");
  spec.z = parse_point(a.z, "--z");
  spec.solver.seed = seed;
  spec.solver.eps = a.eps;
  spec.oracle = a.oracle;
  spec.budget.seed = seed;
  spec.validate();

  // Open before computing so an unwritable path fails fast.
  std::ofstream os(a.out, std::ios::binary | std::ios::trunc);
  if (!os) throw bidisc::Error(ErrorCode::Io, "cannot open '" + a.out + "' for writing");
  const auto rows = bidisc::run_sweep(spec);
  bidisc::write_sweep_csv(os, rows);
  os.flush();
  if (!os) throw bidisc::Error(ErrorCode::Io, "write to '" + a.out + "' failed");
  std::cout << json{{"rows", rows.size()}, {"out", a.out}}.dump() << "\n";
  return kExitValid;
}

int cmd_selftest(bool quick, std::uint64_t seed) {
  bool all = true;
  for (const auto& r : bidisc::run_selftest(quick, seed)) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"Certified two-pole Lempert and Caratheodory values on the bidisc"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();

  PointArgs solve_args;
  int starts = bidisc::InversionConfig{}.starts;
  bool with_oracle = false;
  auto* solve = app.add_subcommand("solve", "certify the value for base point z and poles p, q");
  add_point_options(solve, solve_args);
  solve->add_option("--seed", seed, "64-bit seed (default from BIDISC_SEED)");
  solve->add_option("--starts", starts, "inversion multistart budget")->capture_default_str();
  solve->add_flag("--oracle", with_oracle, "attach the independent sandwich bounds");

  PointArgs classify_args;
  auto* classify = app.add_subcommand("classify", "region label and margin as one JSON line");
  add_point_options(classify, classify_args);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "solve on a 2-D grid of pole coordinates, CSV out");
  sweep->add_option("--x", sweep_args.x, "first varying coordinate, e.g. p1_re")->required();
  sweep->add_option("--x-range", sweep_args.x_range, "LO,HI")->required();
  sweep->add_option("--nx", sweep_args.nx, "points along x")->capture_default_str();
  sweep->add_option("--y", sweep_args.y, "second varying coordinate")->required();
  sweep->add_option("--y-range", sweep_args.y_range, "LO,HI")->required();
  sweep->add_option("--ny", sweep_args.ny, "points along y")->capture_default_str();
  sweep->add_option("--fixed", sweep_args.fixed, "all 8 pole coordinates; the two varying ones are ignored")->required();
  sweep->add_option("--z", sweep_args.z, "base point re,im,re,im")->capture_default_str();
  sweep->add_option("--eps", sweep_args.eps, "region margin")->capture_default_str();
  sweep->add_option("--seed", seed, "64-bit seed (default from BIDISC_SEED)");
  sweep->add_flag("--oracle", sweep_args.oracle, "add sandwich width per cell");
  sweep->add_option("--out", sweep_args.out, "CSV output path")->required();

  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_flag("--quick", quick, "reduced sample counts");
  selftest->add_option("--seed", seed, "64-bit seed (default from BIDISC_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitValid : kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(solve_args, seed, starts, with_oracle);
    if (*classify) return cmd_classify(classify_args);
    if (*sweep) return cmd_sweep(sweep_args, seed);
    if (*selftest) return cmd_selftest(quick, seed);
  } catch (const bidisc::Error& e) {
    return report_error(e);
  }
  return kExitInvalid;
}
