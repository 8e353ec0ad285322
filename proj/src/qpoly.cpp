#include "qzb/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qzb/error.hpp"

namespace qzb {

QPolynomial::QPolynomial(std::vector<Quaternion> coeffs, Side side)
    : coeffs_(std::move(coeffs)), side_(side) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidInput, "polynomial needs at least one coefficient");
  double largest = 0.0;
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
    largest = std::max(largest, modulus(c));
  }
  if (largest == 0.0) throw Error(ErrorCode::InvalidInput, "the zero polynomial has no degree");
  const double cutoff = 1e-14 * largest;
  while (coeffs_.size() > 1 && modulus(coeffs_.back()) < cutoff) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int n, Side side) {
  std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
  c.back() = 1.0;
  return {std::move(c), side};
}

QPolynomial QPolynomial::from_real(std::span<const double> coeffs, Side side) {
  return {std::vector<Quaternion>(coeffs.begin(), coeffs.end()), side};
}

bool QPolynomial::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Quaternion& q) { return q.x == 0.0 && q.y == 0.0 && q.z == 0.0; });
}

double QPolynomial::max_coeff_modulus() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, modulus(c));
  return m;
}

Quaternion evaluate(const QPolynomial& p, const Quaternion& t) {
  Quaternion power = 1.0;
  Quaternion sum;
  const auto coeffs = p.coeffs();
  for (std::size_t nu = 0; nu < coeffs.size(); ++nu) {
    sum += p.side() == Side::Right ? power * coeffs[nu] : coeffs[nu] * power;
    if (nu + 1 < coeffs.size()) power = power * t;
  }
  return sum;
}

QPolynomial star_mul(const QPolynomial& f, const QPolynomial& g) {
  if (f.side() != g.side()) throw Error(ErrorCode::SideMismatch, "star product of polynomials with different sides");
  const auto p = f.coeffs();
  const auto q = g.coeffs();
  std::vector<Quaternion> c(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) c[i + j] += p[i] * q[j];
  return {std::move(c), f.side()};
}

QPolynomial conj_poly(const QPolynomial& f) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& q : c) q = conj(q);
  return {std::move(c), f.side()};
}

QPolynomial symmetrize(const QPolynomial& f) {
  const QPolynomial s = star_mul(f, conj_poly(f));
  const double limit = 1e-10 * s.max_coeff_modulus();
  std::vector<Quaternion> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (imag_modulus(c[k]) > limit) {
      std::ostringstream os;
      os << "coefficient " << k << " = " << c[k] << " of f * conj(f) is not real";
      throw Error(ErrorCode::SymmetrizationNotReal, os.str());
    }
    c[k] = c[k].w;
  }
  return {std::move(c), f.side()};
}

QPolynomial scale_argument(const QPolynomial& p, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorCode::NonPositiveScale, "argument scale must be positive");
  std::vector<Quaternion> c(p.coeffs().begin(), p.coeffs().end());
  double w = 1.0;
  for (auto& q : c) {
    q *= w;
    w *= rho;
  }
  return {std::move(c), p.side()};
}

QPolynomial side_dual(const QPolynomial& p) {
  std::vector<Quaternion> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& q : c) q = conj(q);
  return {std::move(c), flip(p.side())};
}

}  // namespace qzb
