#pragma once

#include <span>
#include <vector>

#include "qzb/quaternion.hpp"

namespace qzb {

/// Which side of t^nu the coefficients sit on when the polynomial is evaluated.
enum class Side {
  Left,   // sum q_nu t^nu
  Right,  // sum t^nu q_nu (canonical)
};

constexpr Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Quaternionic polynomial with coefficients in ascending degree order.
///
/// Construction trims trailing coefficients whose modulus is below
/// 1e-14 times the largest coefficient modulus, so the leading coefficient is
/// always nonzero. The zero polynomial is rejected.
///
/// Every bound in bounds.hpp reads only coefficient moduli or real/imaginary
/// component magnitudes, so it does not depend on the side convention.
class QPolynomial {
 public:
  QPolynomial(std::vector<Quaternion> coeffs, Side side = Side::Right);

  /// Monomial t^n with unit coefficient.
  static QPolynomial monomial(int n, Side side = Side::Right);

  /// Real-coefficient polynomial.
  static QPolynomial from_real(std::span<const double> coeffs, Side side = Side::Right);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Side side() const { return side_; }
  std::span<const Quaternion> coeffs() const { return coeffs_; }
  const Quaternion& operator[](int nu) const { return coeffs_[static_cast<std::size_t>(nu)]; }
  const Quaternion& leading() const { return coeffs_.back(); }

  /// True when every coefficient has zero imaginary part.
  bool has_real_coefficients() const;

  /// max_nu |q_nu|.
  double max_coeff_modulus() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<Quaternion> coeffs_;
  Side side_;
};

/// P(t) with t^nu built by repeated multiplication; the coefficient is
/// applied on the side given by P.side().
Quaternion evaluate(const QPolynomial& p, const Quaternion& t);

/// Star (Cauchy) product: c_k = sum_i p_i q_{k-i}, p from f, q from g.
/// Throws ErrorCode::SideMismatch when the sides differ.
QPolynomial star_mul(const QPolynomial& f, const QPolynomial& g);

/// Coefficientwise quaternion conjugate, side kept.
QPolynomial conj_poly(const QPolynomial& f);

/// f * conj_poly(f), of degree 2n, which has real coefficients and vanishes
/// on every zero of f. Imaginary parts are checked against 1e-10 times the
/// largest coefficient modulus (ErrorCode::SymmetrizationNotReal otherwise)
/// and then set to exactly zero.
QPolynomial symmetrize(const QPolynomial& f);

/// Coefficient nu multiplied by rho^nu, so the zeros are divided by rho.
/// Throws ErrorCode::NonPositiveScale unless rho > 0.
QPolynomial scale_argument(const QPolynomial& p, double rho);

/// Conjugated coefficients with the opposite side: t0 is a zero of p iff
/// conj(t0) is a zero of side_dual(p).
QPolynomial side_dual(const QPolynomial& p);

}  // namespace qzb
