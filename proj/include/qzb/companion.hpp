#pragma once

#include <span>
#include <vector>

#include "qzb/qpoly.hpp"
#include "qzb/quaternion.hpp"

namespace qzb {

/// Dense n x n quaternion matrix, row-major.
class QMatrix {
 public:
  explicit QMatrix(int n);
  QMatrix(int n, std::vector<Quaternion> entries);

  static QMatrix identity(int n);
  static QMatrix diagonal(std::span<const Quaternion> diag);

  int size() const { return n_; }
  Quaternion& operator()(int row, int col) { return entries_[index(row, col)]; }
  const Quaternion& operator()(int row, int col) const { return entries_[index(row, col)]; }

  QMatrix transposed() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int n_;
  std::vector<Quaternion> entries_;
};

/// A - lambda I, with the scalar placed on the diagonal.
QMatrix shift(const QMatrix& a, const Quaternion& lambda);

struct Ball {
  Quaternion center;
  double radius = 0.0;

  bool contains(const Quaternion& t, double slack = 0.0) const {
    return distance(t, center) <= radius + slack;
  }
};

/// Companion matrix whose left spectrum is the zero set of P.
///
/// Left coefficients (sum q_nu t^nu): ones on the superdiagonal and last row
/// -q_n^{-1} q_nu. A left eigenvector satisfies y_mu = lambda^mu y_0 and the
/// last row then reads sum q_nu lambda^nu = 0.
///
/// Right coefficients (sum t^nu q_nu): the transpose layout, ones on the
/// subdiagonal and last column -q_nu q_n^{-1}. Normalizing y_{n-1} = 1 the
/// rows unwind to lambda^n + sum lambda^nu q_nu q_n^{-1} = 0, i.e. P(lambda) q_n^{-1} = 0.
///
/// The two layouts coincide up to transposition when the coefficients are real.
/// Throws ErrorCode::ZeroLeading for degree 0 (no companion exists).
QMatrix build_companion(const QPolynomial& p);

/// D^{-1} A D for D = diag(d); entry (mu, nu) is scaled by d_nu / d_mu.
/// Throws ErrorCode::NonPositiveDiagonal unless every d_i > 0 and len(d) = n.
QMatrix diag_similarity(const QMatrix& a, std::span<const double> d);

/// Row-form Gershgorin balls: center A[mu][mu], radius sum_{nu != mu} |A[mu][nu]|.
/// Every left eigenvalue lies in their union. There is no column variant: the
/// left spectrum is not invariant under transposition over H.
std::vector<Ball> gershgorin_balls(const QMatrix& a);

/// True when t lies in some ball, allowing `slack` on each radius.
bool in_union(std::span<const Ball> balls, const Quaternion& t, double slack = 0.0);

inline constexpr double kDefaultSingularTol = 1e-10;

/// Gaussian elimination over H with largest-modulus partial pivoting; pivot
/// rows are normalized by left multiplication with the pivot inverse.
/// Reports singular when a pivot modulus falls below tol * max(1, largest
/// initial entry modulus). The floor of 1 keeps the test meaningful for a
/// 1x1 matrix, whose only entry is its pivot. Since H is a division ring,
/// A y = 0 has a nonzero solution iff a pivot vanishes (in exact arithmetic).
bool is_singular(const QMatrix& a, double tol = kDefaultSingularTol);

}  // namespace qzb
