// qzb: command-line front end for quaternionic polynomial zeros and bounds.
//
// Exit codes: 0 success, 1 soundness violation / failed invariant / oracle
// failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qzb/bounds.hpp"
#include "qzb/harness.hpp"
#include "qzb/io.hpp"
#include "qzb/qpoly.hpp"
#include "qzb/roots.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

using nlohmann::json;

int run_eval(const std::string& file, const std::string& t_text) {
  const auto p = qzb::read_polynomial(file);
  const auto t = qzb::parse_quaternion(t_text);
  std::cout << json{{"value", qzb::to_json(qzb::evaluate(p, t))}}.dump() << "\n";
  return 0;
}

int run_roots(const std::string& file, double tol) {
  const auto p = qzb::read_polynomial(file);
  std::cout << qzb::to_json(qzb::all_zeros(p, tol)).dump(2) << "\n";
  return 0;
}

int run_bounds(const std::string& file, std::optional<double> rho, bool all_params) {
  const auto p = qzb::read_polynomial(file);
  std::vector<double> grid = rho ? std::vector<double>{*rho} : qzb::default_rho_grid();
  if (rho && !(*rho > 0.0)) throw qzb::Error(qzb::ErrorCode::NonPositiveScale, "--rho must be positive");
  const auto reports = all_params ? qzb::all_bound_reports(p, grid) : qzb::scan_bounds(p, grid);
  json out = {{"reports", json::array()}, {"best", qzb::to_json(qzb::best_bound(p, grid))}};
  for (const auto& r : reports) out["reports"].push_back(qzb::to_json(r));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(std::uint64_t seed, double scale) {
  const auto results = qzb::run_invariant_suite(seed, scale);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " invariants hold\n";
  return failed ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeros and zero-inclusion bounds of quaternionic polynomials"};
  app.require_subcommand(1);

  std::string file, t_text;
  double tol = qzb::kDefaultOracleTol;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a quaternion");
  eval->add_option("file", file, "Polynomial JSON file")->required();
  eval->add_option("t", t_text, "Point as \"[w,x,y,z]\" or \"w,x,y,z\"")->required();

  auto* roots = app.add_subcommand("roots", "Print all zeros (isolated points and spheres)");
  roots->add_option("file", file, "Polynomial JSON file")->required();
  roots->add_option("--tol", tol, "Oracle tolerance");

  std::optional<double> rho;
  bool all_params = false;
  auto* bounds = app.add_subcommand("bounds", "Print every zero-inclusion bound");
  bounds->add_option("file", file, "Polynomial JSON file")->required();
  bounds->add_option("--rho", rho, "Use this rho instead of the default grid");
  bounds->add_flag("--all-params", all_params, "Print every parameter combination examined");

  std::string family_name, out_path;
  qzb::FamilySpec spec;
  std::optional<int> lacunary_index;
  qzb::BenchOptions options;
  auto* bench = app.add_subcommand("bench", "Run bounds against the oracle on a generated family");
  bench->add_option("--family", family_name, "Family name")->required();
  bench->add_option("--degree", spec.degree, "Degree")->required();
  bench->add_option("--count", spec.count, "Number of polynomials")->required();
  bench->add_option("--seed", spec.seed, "Run seed")->required();
  bench->add_option("--out", out_path, "CSV output path")->required();
  bench->add_option("--rho", spec.rho, "Family rho (default 1)");
  bench->add_option("--lacunary-index", lacunary_index, "l for the thm1 and extremal families");
  bench->add_option("--tol", options.oracle_tol, "Oracle tolerance (default 1e-10)");
  bench->add_option("--slack", options.soundness_slack, "Relative soundness slack (default 1e-9)");
  bench->add_option("--exclude", options.excluded_bounds, "Bound names to leave out")->delimiter(',');

  std::uint64_t verify_seed = 20240601;
  double verify_scale = 1.0;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", verify_seed, "Seed");
  verify->add_option("--scale", verify_scale, "Sample-size multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*eval) return run_eval(file, t_text);
    if (*roots) return run_roots(file, tol);
    if (*bounds) return run_bounds(file, rho, all_params);
    if (*verify) return run_verify(verify_seed, verify_scale);
    if (*bench) {
      const auto family = qzb::parse_family(family_name);
      if (!family) throw qzb::Error(qzb::ErrorCode::SpecInvalid, "unknown family '" + family_name + "'");
      spec.family = *family;
      spec.lacunary_index = lacunary_index;
      const auto summary = qzb::run_bench(spec, out_path, options);
      std::cerr << summary.rows << " rows (" << summary.skipped << " skipped) written to " << out_path << " and "
                << qzb::summary_path(out_path).string() << "\n";
      return 0;
    }
  } catch (const qzb::SoundnessViolation& e) {
    std::cerr << "soundness violation: " << e.what() << "\nreproduction bundle: " << e.bundle().string() << "\n";
    return kExitViolation;
  } catch (const qzb::Error& e) {
    std::cerr << e.what() << "\n";
    const bool oracle = e.code() == qzb::ErrorCode::NoConvergence || e.code() == qzb::ErrorCode::OracleInconsistent;
    return oracle ? kExitViolation : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
