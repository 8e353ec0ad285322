#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qzb/error.hpp"
#include "qzb/qpoly.hpp"

namespace qzb {

using Complex = std::complex<double>;

/// Real polynomial, ascending coefficients, leading coefficient nonzero.
struct RealPolynomial {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Real coefficient sequence of a real-coefficient QPolynomial (as produced
/// by symmetrize). Throws ErrorCode::InvalidInput if a coefficient is not real.
RealPolynomial to_real(const QPolynomial& p);

/// Thrown by complex_roots when the iteration budget runs out. Carries the
/// last iterate and its residuals so callers can log and skip.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, std::vector<Complex> best, std::vector<double> residuals)
      : Error(ErrorCode::NoConvergence, what), best_(std::move(best)), residuals_(std::move(residuals)) {}

  const std::vector<Complex>& best_iterate() const { return best_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<Complex> best_;
  std::vector<double> residuals_;
};

inline constexpr double kDefaultOracleTol = 1e-10;
inline constexpr int kAberthMaxIterations = 500;

/// All complex roots with multiplicity, by Aberth-Ehrlich iteration.
///
/// Start points lie on the circle of radius 0.9 (1 + max_j |a_j / a_m|) at
/// angles 2 pi k / m + 0.3. Sweeps run Gauss-Seidel style in ascending index
/// order. A root stops moving once its correction is below tol (1 + |z|) or
/// its residual is at rounding level; after at most 500 sweeps every root gets
/// three Newton polishing steps. Exact zero roots are split off first.
std::vector<Complex> complex_roots(std::span<const Complex> coeffs, double tol = kDefaultOracleTol);
std::vector<Complex> complex_roots(const RealPolynomial& p, double tol = kDefaultOracleTol);

/// Group of root approximations that numerically represent one root of
/// multiplicity `multiplicity`.
struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

/// Groups approximations whose Weierstrass inclusion discs overlap (a
/// connected component of m discs holds exactly m roots) and refines each
/// group of size m by Newton iteration on the (m-1)-th derivative, which has
/// a simple root at an m-fold root.
std::vector<RootCluster> cluster_roots(std::span<const Complex> coeffs, std::span<const Complex> roots);

/// Locus {x + y I : I in S} (a point when y = 0) that may carry zeros of P.
/// `multiplicity` counts the roots of the symmetrization that map onto it,
/// so a simple isolated zero of P contributes 2.
struct SphereCandidate {
  double x = 0.0;
  double y = 0.0;
  int multiplicity = 0;
};

/// Symmetrize P, find the complex roots, send a + b i to (a, |b|) and merge
/// points closer than 1e-7 (1 + |a + b i|). Every zero of P lies on one of
/// the returned loci. Candidates with y <= 1e-10 (1 + |x|) are reported with
/// y = 0. Propagates NoConvergenceError.
std::vector<SphereCandidate> candidate_spheres(const QPolynomial& p, double tol = kDefaultOracleTol);

struct SphereResolution {
  enum class Kind { Isolated, WholeSphere, Empty };
  Kind kind = Kind::Empty;
  Quaternion zero;  // meaningful for Kind::Isolated
};

/// sum_nu |q_nu| r^nu: the magnitude against which evaluation residuals at
/// modulus r are measured.
double evaluation_scale(const QPolynomial& p, double r);

/// Decides how P vanishes on {x + y I}. With t^nu = alpha_nu + beta_nu I,
/// P(x + y I) = A + I B for right coefficients and A + B I for left
/// coefficients, where A = sum alpha_nu q_nu and B = sum beta_nu q_nu.
/// Both A and B negligible means the whole sphere vanishes; otherwise the only
/// candidate is I0 = -A B^{-1} (right) or -B^{-1} A (left), accepted when it
/// is a unit imaginary. y = 0 is the real point x.
SphereResolution resolve_sphere(const QPolynomial& p, double x, double y, double tol = kDefaultOracleTol);

struct ZeroSet {
  std::vector<Quaternion> isolated;
  std::vector<std::pair<double, double>> spheres;  // (x, y), y > 0
  double residual_max = 0.0;
  // Degrees of P accounted for by each entry; not serialized.
  std::vector<int> isolated_multiplicity;
  std::vector<int> sphere_multiplicity;

  int total_multiplicity() const;
};

/// Every zero of P: isolated points and whole spheres.
///
/// Isolated zeros must satisfy |P(t0)| <= tol * evaluation_scale(P, |t0|);
/// spheres are checked at 16 sampled imaginary units. Throws
/// ErrorCode::OracleInconsistent if a simple, well-separated candidate
/// resolves to nothing (a bug, not bad input) and NoConvergenceError when a
/// multiple cluster cannot be resolved numerically.
ZeroSet all_zeros(const QPolynomial& p, double tol = kDefaultOracleTol);

/// Largest modulus over isolated zeros and spheres (sqrt(x^2 + y^2)).
double max_zero_modulus(const ZeroSet& zs);
double max_zero_modulus(const QPolynomial& p, double tol = kDefaultOracleTol);

}  // namespace qzb
