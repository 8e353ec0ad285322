#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qzb/qpoly.hpp"

namespace qzb {

/// Outcome of one zero-inclusion bound: either the hypothesis holds and every
/// zero t satisfies |t| <= radius, or the report says which hypothesis failed.
struct BoundReport {
  std::string name;
  bool applicable = false;
  std::optional<double> radius;  // present iff applicable
  std::string hypothesis_detail;
  std::map<std::string, double> parameters;
  // Printed with suspect indexing; never used by best_bound or soundness gates.
  bool advisory = false;
};

/// Real part and the three imaginary components of each coefficient.
struct ComponentProfile {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> gammas;
  std::vector<double> deltas;

  static ComponentProfile of(const QPolynomial& p);
};

namespace bound_name {
inline constexpr const char* kTheorem1 = "thm1";
inline constexpr const char* kCorollary1 = "cor1";
inline constexpr const char* kLemma4 = "lemma4";
inline constexpr const char* kTheorem2 = "thm2";
inline constexpr const char* kRemark1 = "remark1";
inline constexpr const char* kTheorem3 = "thm3";
inline constexpr const char* kTheorem4 = "thm4";
inline constexpr const char* kTheorem5 = "thm5";
inline constexpr const char* kTheorem6 = "thm6";
inline constexpr const char* kCauchy = "cauchy";
inline constexpr const char* kGauss = "gauss";
inline constexpr const char* kEnestromKakeya = "ek";
inline constexpr const char* kGauss1849 = "gauss1849";
}  // namespace bound_name

/// Non-advisory bounds in the fixed order used by reports and CSV columns.
std::span<const char* const> bound_names();

/// Relative slack on every hypothesis inequality.
inline constexpr double kChainSlack = 1e-12;

/// Greatest positive root K1 of K^{n+1} - K^n - K^{l+1} + 1 = 0.
///
/// The left side is (K - 1)(K^n - K^l - ... - 1). For l = 0 the second factor
/// only vanishes at 1, so K1 = 1. For l >= 1 it is negative just above 1 and
/// positive at 2, and K^{-n}(K^n - ...) is increasing, so K1 is the unique
/// root in (1, 2): bisection on [1 + 1e-12, 2] then Newton polishing.
/// Throws ErrorCode::BadIndices unless n >= 2 and 0 <= l <= n - 1.
double greatest_root_K(int n, int l);

/// Lacunary bound. P = q_n t^n + q_l t^l + ... + q_0 (coefficients strictly
/// between l and n vanish) with |q_j| rho^{n-j} <= |q_n| for j <= l gives
/// |t| <= K1 / rho. Sharp on (rho t)^n - (rho t)^l - ... - 1.
BoundReport bound_theorem1(const QPolynomial& p, double rho, int l);

/// bound_theorem1 with l = n - 1, where K1 solves k^{n+1} - 2 k^n + 1 = 0.
BoundReport bound_corollary1(const QPolynomial& p, double rho);

/// Gershgorin bound on the scaled companion matrix:
/// |t| <= max{r, sum_{j<=l} |q_j| / (|q_n| r^{n-j-1})} for any r > 0.
/// Inapplicable when a coefficient strictly between l and n is nonzero.
/// Throws ErrorCode::NonPositiveScale unless r > 0, BadIndices unless 0 <= l < n.
BoundReport bound_lemma4(const QPolynomial& p, double r, int l);

struct OptimalRadius {
  double r_star = 0.0;
  double radius = 0.0;
};

/// Minimizes bound_lemma4 over r. The two branches of the max cross where
/// sum_{j<=l} |q_j| / (|q_n| r^{n-j}) = 1; that r is found by bisection on
/// [1e-8, r_hi] (r_hi doubles from 1) to relative width 1e-12.
/// Throws ErrorCode::DegenerateAllZero if q_0 .. q_l all vanish and
/// ErrorCode::BadIndices for degree < 2 or a broken lacunary shape.
OptimalRadius optimize_r(const QPolynomial& p, int l);

/// |t| <= 1 + max_{j<n} |q_j| / |q_n|. Always applicable.
BoundReport bound_cauchy(const QPolynomial& p);

/// Real coefficients only: R = max_k (n sqrt(2) |a_k|)^{1/k} for the monic form
/// t^n + a_1 t^{n-1} + ... + a_n. Zero a_k are skipped.
BoundReport bound_gauss(const QPolynomial& p);

/// Positive root of z^n - sqrt(2) (|a_n| z^{n-1} + ... + |a_1|) with the
/// indexing exactly as printed in the classical statement (a_n, the constant
/// term of the monic form, multiplies z^{n-1}). The indexing is suspect, so
/// the report is advisory. Applicable when all coefficients share one complex
/// slice C_I (pairwise commute).
BoundReport bound_gauss1849(const QPolynomial& p);

/// Real coefficients with 0 <= q_0 <= ... <= q_n and q_n > 0 give |t| <= 1.
BoundReport check_enestrom_kakeya(const QPolynomial& p);

/// Up-down modulus chain |q_0| <= rho |q_1| <= ... <= rho^k |q_k| >= ... >= rho^n |q_n|
/// gives |t| <= rho (2 rho^k |q_k| / (rho^n |q_n|) - 1)
///            + 2 sum_{j=0}^{n} |q_j - |q_j|| / (rho^{n-j-1} |q_n|),
/// where q_j - |q_j| subtracts the real scalar |q_j|.
/// Throws ErrorCode::BadIndices unless 0 <= k <= n, NonPositiveScale unless rho > 0.
BoundReport bound_theorem2(const QPolynomial& p, double rho, int k);

/// Result of searching for a direction gamma that every nonzero coefficient
/// is within `theta` of.
struct ConeCertificate {
  Quaternion gamma;
  double theta = 0.0;  // max_j angle(q_j, gamma)
};

/// Smallest half-angle over the candidate directions: each nonzero
/// coefficient and the coefficient sum. A supplied gamma is the only
/// candidate. Empty if no candidate is nonzero.
std::optional<ConeCertificate> certify_cone(const QPolynomial& p, std::optional<Quaternion> gamma = std::nullopt);

/// The modulus chain of bound_theorem2 plus angle(q_j, gamma) <= theta <= pi/2
/// for all j gives |t| <= rho {(2 rho^k |q_k| / (rho^n |q_n|) - 1) cos(theta) + sin(theta)}
///                       + 2 sin(theta) sum_{j<n} |q_j| / (rho^{n-j-1} |q_n|).
/// Throws ErrorCode::HypothesisViolated if no candidate gamma certifies the
/// angle condition, BadIndices for k outside 0..n or theta outside [0, pi/2].
BoundReport bound_remark1(const QPolynomial& p, double rho, int k, double theta,
                          std::optional<Quaternion> gamma = std::nullopt);

/// Component-wise variants. alpha_j = Re q_j and beta_j, gamma_j, delta_j are
/// the i, j, k components. Each chain reads
///   0 <= c_0 <= rho c_1 <= ... <= rho^p c_p >= ... >= rho^n c_n
/// with its own peak p; the alpha chain also requires rho^n alpha_n > 0.
/// Radii are evaluated exactly as stated:
///   thm3: rho (2 rho^k a_k / (rho^n a_n) - 1) + (2/a_n) sum (|b_j| + |g_j| + |d_j|) / rho^{n-j-1}
///   thm4: alpha and beta peak terms over rho^n |q_n|, residual sum of |g_j| + |d_j|
///   thm5: alpha, beta, gamma peak terms, residual sum of |d_j|
///   thm6: four peak terms, no residual sum
/// The thm4..thm6 statements are not sound as printed (each peak term subtracts
/// rho even though only rho c_n / |q_n| is available); see README. A negative
/// formula value is reported clamped to 0 with a note in hypothesis_detail.
BoundReport bound_theorem3(const QPolynomial& p, double rho, int k);
BoundReport bound_theorem4(const QPolynomial& p, double rho, int k, int r);
BoundReport bound_theorem5(const QPolynomial& p, double rho, int k, int r, int s);
BoundReport bound_theorem6(const QPolynomial& p, double rho, int k, int r, int s, int l);

/// Default rho grid: 2^{i/2} for i = -6 .. 6.
std::vector<double> default_rho_grid();

/// For every bound name, the applicable report with the smallest radius over
/// the rho grid and an exhaustive scan of peak indices (optimal r for
/// lemma4, the largest admissible rho for thm1/cor1 added to the grid, the
/// certified cone angle for remark1). Inapplicable bounds keep the report
/// that explains why. Advisory bounds are included but flagged.
std::vector<BoundReport> scan_bounds(const QPolynomial& p, std::span<const double> rho_grid);

/// Every report examined by scan_bounds, one per parameter combination.
std::vector<BoundReport> all_bound_reports(const QPolynomial& p, std::span<const double> rho_grid);

/// Smallest applicable non-advisory radius from scan_bounds. The report keeps
/// the winner's name and parameters. Cauchy always applies, so a radius always exists.
BoundReport best_bound(const QPolynomial& p, std::span<const double> rho_grid);

}  // namespace qzb
