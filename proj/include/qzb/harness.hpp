#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qzb/bounds.hpp"
#include "qzb/error.hpp"
#include "qzb/qpoly.hpp"
#include "qzb/roots.hpp"

namespace qzb {

enum class Family { Thm1, Cor1, Thm2, Remark1, Thm3, Thm4, Thm5, Thm6, EK, Cauchy, Dense, Extremal };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& name);
std::vector<Family> all_families();

/// Which polynomials to generate. `lacunary_index` fixes l for the thm1 and
/// extremal families (drawn per polynomial for thm1, n - 1 for extremal,
/// when absent).
struct FamilySpec {
  Family family = Family::Dense;
  int degree = 2;
  double rho = 1.0;
  std::uint64_t seed = 0;
  int count = 1;
  std::optional<int> lacunary_index;
};

/// Throws ErrorCode::SpecInvalid on a degree, rho, count or l out of range.
void validate(const FamilySpec& spec);

/// A generated polynomial and the parameters (rho, peak indices, l, theta)
/// under which its family's hypothesis holds by construction.
struct GeneratedPolynomial {
  QPolynomial poly;
  std::map<std::string, double> hypothesis;
};

/// Polynomial number `index` of the family spec. Each index has its own sampler
/// seeded with mix_seed(spec.seed, index), so items are independent of one
/// another and of evaluation order.
///
/// Construction is direct, never by rejection: a peak index is drawn, the
/// weighted chain rho^j c_j is built from sorted positive draws (ascending up
/// to the peak, descending after it), then divided by rho^j and given a
/// random unit direction where the family allows one.
GeneratedPolynomial generate_one(const FamilySpec& spec, int index);

std::vector<GeneratedPolynomial> generate(const FamilySpec& spec);

/// Runs the family's own hypothesis checker with the recorded parameters.
BoundReport check_family_hypothesis(Family family, const GeneratedPolynomial& g);

struct BenchOptions {
  double oracle_tol = kDefaultOracleTol;
  double soundness_slack = 1e-9;
  std::vector<double> rho_grid = default_rho_grid();
  std::vector<std::string> excluded_bounds;
};

struct BenchRow {
  Family family = Family::Dense;
  int seed_index = 0;
  int degree = 0;
  bool skipped = false;
  std::string skip_reason;
  double oracle_max_modulus = 0.0;
  std::vector<BoundReport> reports;  // one per emitted column, in column order
};

/// First bound whose radius is below the oracle's largest zero modulus by
/// more than slack * radius.
struct Violation {
  BoundReport report;
  double oracle_max_modulus = 0.0;
};

std::optional<Violation> soundness_violation(const BenchRow& row, double slack);

/// Raised by run_bench after the reproduction bundle has been written.
class SoundnessViolation : public std::runtime_error {
 public:
  SoundnessViolation(const std::string& what, std::filesystem::path bundle)
      : std::runtime_error(what), bundle_(std::move(bundle)) {}
  const std::filesystem::path& bundle() const { return bundle_; }

 private:
  std::filesystem::path bundle_;
};

/// Bound names emitted as CSV columns, in order, after exclusions.
std::vector<std::string> bench_bound_names(const BenchOptions& options);

/// Oracle plus every bound for polynomial `index`; a NoConvergence or
/// OracleInconsistent oracle failure yields a skipped row.
BenchRow bench_row(const FamilySpec& spec, int index, const BenchOptions& options);

/// Header and rows. Columns: family, seed_index, degree, oracle_max_modulus,
/// then <name>_radius and <name>_ratio per bound (empty when inapplicable),
/// then skipped. LF line endings, numbers printed with %.17g.
std::string csv_header(const BenchOptions& options);
std::string csv_line(const BenchRow& row);

struct BenchSummary {
  nlohmann::json json;
  int rows = 0;
  int skipped = 0;
};

nlohmann::json summarize(const FamilySpec& spec, const BenchOptions& options, const std::vector<BenchRow>& rows);

/// Path of the JSON summary written next to the CSV (foo.csv -> foo.summary.json).
std::filesystem::path summary_path(const std::filesystem::path& csv_path);

/// Generates spec.count polynomials, evaluates them, writes the CSV to
/// csv_path and the summary next to it. Output is byte-identical for equal
/// inputs. On a soundness violation writes <csv_path>.violation.json and
/// throws SoundnessViolation before any CSV is written.
BenchSummary run_bench(const FamilySpec& spec, const std::filesystem::path& csv_path,
                       const BenchOptions& options = {});

nlohmann::json to_json(const FamilySpec& spec);

/// Largest distance from a zero of one set to the nearest zero of the other,
/// in both directions. Spheres are compared as points (x, y). Infinity when
/// one set has isolated zeros or spheres and the other has none.
double zero_set_mismatch(const ZeroSet& a, const ZeroSet& b);

/// One line of the `verify` report.
struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Property checks across all modules on seeded random corpora, scaled by
/// `scale` (1.0 = the documented sample sizes).
std::vector<InvariantResult> run_invariant_suite(std::uint64_t seed, double scale = 1.0);

}  // namespace qzb
