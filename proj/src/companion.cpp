#include "qzb/companion.hpp"

#include <algorithm>
#include <utility>

#include "qzb/error.hpp"

namespace qzb {

QMatrix::QMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "matrix dimension must be at least 1");
}

QMatrix::QMatrix(int n, std::vector<Quaternion> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "matrix dimension must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidInput, "entry count does not match n * n");
  for (const auto& q : entries_)
    if (!is_finite(q)) throw Error(ErrorCode::InvalidInput, "non-finite matrix entry");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> diag) {
  QMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.size(); ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix shift(const QMatrix& a, const Quaternion& lambda) {
  QMatrix m = a;
  for (int i = 0; i < m.size(); ++i) m(i, i) -= lambda;
  return m;
}

QMatrix build_companion(const QPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::ZeroLeading, "a constant polynomial has no companion matrix");
  const Quaternion lead_inv = inverse(p.leading());
  QMatrix c(n);
  if (p.side() == Side::Left) {
    for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = 1.0;
    for (int nu = 0; nu < n; ++nu) c(n - 1, nu) = -(lead_inv * p[nu]);
  } else {
    for (int i = 0; i + 1 < n; ++i) c(i + 1, i) = 1.0;
    for (int nu = 0; nu < n; ++nu) c(nu, n - 1) = -(p[nu] * lead_inv);
  }
  return c;
}

QMatrix diag_similarity(const QMatrix& a, std::span<const double> d) {
  const int n = a.size();
  if (d.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NonPositiveDiagonal, "diagonal length does not match the matrix");
  for (double v : d)
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorCode::NonPositiveDiagonal, "diagonal entries must be positive");
  QMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out(r, c) = a(r, c) * (d[static_cast<std::size_t>(c)] / d[static_cast<std::size_t>(r)]);
  return out;
}

std::vector<Ball> gershgorin_balls(const QMatrix& a) {
  std::vector<Ball> balls;
  balls.reserve(static_cast<std::size_t>(a.size()));
  for (int r = 0; r < a.size(); ++r) {
    double radius = 0.0;
    for (int c = 0; c < a.size(); ++c)
      if (c != r) radius += modulus(a(r, c));
    balls.push_back({a(r, r), radius});
  }
  return balls;
}

bool in_union(std::span<const Ball> balls, const Quaternion& t, double slack) {
  return std::any_of(balls.begin(), balls.end(), [&](const Ball& b) { return b.contains(t, slack); });
}

bool is_singular(const QMatrix& a, double tol) {
  const int n = a.size();
  double scale = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) scale = std::max(scale, modulus(a(r, c)));
  if (scale == 0.0) return true;
  const double floor = tol * std::max(scale, 1.0);

  QMatrix m = a;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = modulus(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = modulus(m(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < floor) return true;
    if (pivot != col)
      for (int c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));

    const Quaternion inv = inverse(m(col, col));
    for (int c = col; c < n; ++c) m(col, c) = inv * m(col, c);
    for (int r = col + 1; r < n; ++r) {
      const Quaternion factor = m(r, col);
      if (factor == Quaternion{}) continue;
      for (int c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return false;
}

}  // namespace qzb
