#include "qzb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qzb/random.hpp"

namespace qzb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Horner {
  Complex value;
  Complex derivative;
  double magnitude = 0.0;  // sum |a_j| |z|^j
};

Horner horner(std::span<const Complex> a, Complex z) {
  Horner h;
  const double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    h.derivative = h.derivative * z + h.value;
    h.value = h.value * z + a[k];
    h.magnitude = h.magnitude * r + std::abs(a[k]);
  }
  return h;
}

std::vector<Complex> derivative(std::span<const Complex> a, int order) {
  std::vector<Complex> d(a.begin(), a.end());
  for (int o = 0; o < order && d.size() > 1; ++o) {
    for (std::size_t k = 1; k < d.size(); ++k) d[k - 1] = d[k] * static_cast<double>(k);
    d.pop_back();
  }
  return d;
}

std::vector<Complex> trimmed(std::span<const Complex> coeffs) {
  std::vector<Complex> a(coeffs.begin(), coeffs.end());
  while (!a.empty() && a.back() == Complex{}) a.pop_back();
  if (a.size() < 2) throw Error(ErrorCode::InvalidInput, "root finding needs degree >= 1");
  for (const auto& c : a)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
  return a;
}

// Assumes a[0] != 0 and degree >= 1.
std::vector<Complex> aberth(std::span<const Complex> a, double tol) {
  const std::size_t m = a.size() - 1;
  if (m == 1) return {-a[0] / a[1]};

  double max_ratio = 0.0;
  for (std::size_t j = 0; j < m; ++j) max_ratio = std::max(max_ratio, std::abs(a[j] / a[m]));
  const double radius = 0.9 * (1.0 + max_ratio);

  std::vector<Complex> z(m);
  for (std::size_t k = 0; k < m; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.3);

  std::vector<bool> done(m, false);
  const double rounding = 2.0 * static_cast<double>(m) * kEps;
  for (int sweep = 0; sweep < kAberthMaxIterations; ++sweep) {
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const Horner h = horner(a, z[k]);
      if (std::abs(h.value) <= rounding * h.magnitude) {
        done[k] = true;
        continue;
      }
      Complex repulsion;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        const Complex diff = z[k] - z[j];
        if (diff != Complex{}) repulsion += 1.0 / diff;
      }
      const Complex denom = h.derivative - h.value * repulsion;
      const Complex step = denom != Complex{} ? h.value / denom : Complex{tol * (1.0 + std::abs(z[k])), 0.0};
      z[k] -= step;
      if (std::abs(step) <= tol * (1.0 + std::abs(z[k]))) done[k] = true;
    }
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) break;
  }

  if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
    std::vector<double> residuals(m);
    for (std::size_t k = 0; k < m; ++k) residuals[k] = std::abs(horner(a, z[k]).value);
    std::ostringstream os;
    os << "Aberth iteration did not converge in " << kAberthMaxIterations << " sweeps (degree " << m << ")";
    throw NoConvergenceError(os.str(), z, std::move(residuals));
  }

  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      const Horner h = horner(a, root);
      if (h.derivative == Complex{}) break;
      const Complex next = root - h.value / h.derivative;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      if (std::abs(horner(a, next).value) > std::abs(h.value)) break;
      root = next;
    }
  }
  return z;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

}  // namespace

RealPolynomial to_real(const QPolynomial& p) {
  RealPolynomial r;
  r.coeffs.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0)
      throw Error(ErrorCode::InvalidInput, "polynomial has non-real coefficients");
    r.coeffs.push_back(q.w);
  }
  return r;
}

std::vector<Complex> complex_roots(std::span<const Complex> coeffs, double tol) {
  std::vector<Complex> a = trimmed(coeffs);
  std::size_t zeros = 0;
  while (a.front() == Complex{}) {
    a.erase(a.begin());
    ++zeros;
  }
  std::vector<Complex> roots(zeros);
  if (a.size() > 1) {
    auto rest = aberth(a, tol);
    roots.insert(roots.end(), rest.begin(), rest.end());
  }
  return roots;
}

std::vector<Complex> complex_roots(const RealPolynomial& p, double tol) {
  std::vector<Complex> c(p.coeffs.begin(), p.coeffs.end());
  return complex_roots(c, tol);
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> coeffs, std::span<const Complex> roots) {
  const std::vector<Complex> a = trimmed(coeffs);
  const std::size_t m = roots.size();
  if (m == 0) return {};
  const Complex lead = a.back();

  std::vector<double> radius(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Horner h = horner(a, roots[k]);
    Complex prod = lead;
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) prod *= roots[k] - roots[j];
    const double cap = 0.05 * (1.0 + std::abs(roots[k]));
    const double residual = std::max(std::abs(h.value), kEps * h.magnitude);
    radius[k] = prod == Complex{} ? cap : std::min(cap, static_cast<double>(m) * residual / std::abs(prod));
  }

  DisjointSets sets(m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = k + 1; j < m; ++j)
      if (std::abs(roots[k] - roots[j]) <= radius[k] + radius[j]) sets.unite(k, j);

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t k = 0; k < m; ++k) groups[sets.find(k)].push_back(k);

  std::vector<RootCluster> clusters;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Complex mean;
    for (auto k : g) mean += roots[k];
    mean /= static_cast<double>(g.size());
    const int mult = static_cast<int>(g.size());
    if (mult == 1) {
      clusters.push_back({roots[g.front()], 1});
      continue;
    }
    double extent = 0.0;
    for (auto k : g) extent = std::max(extent, std::abs(roots[k] - mean) + radius[k]);

    // An m-fold root is a simple root of the (m-1)-th derivative.
    const auto d = derivative(a, mult - 1);
    Complex c = mean;
    bool ok = true;
    for (int it = 0; it < 60; ++it) {
      const Horner h = horner(d, c);
      if (h.derivative == Complex{}) break;
      const Complex step = h.value / h.derivative;
      c -= step;
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        ok = false;
        break;
      }
      if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(c))) break;
    }
    if (!ok || std::abs(c - mean) > 2.0 * extent + 1e-12 * (1.0 + std::abs(mean))) c = mean;
    clusters.push_back({c, mult});
  }
  return clusters;
}

std::vector<SphereCandidate> candidate_spheres(const QPolynomial& p, double tol) {
  const RealPolynomial sym = to_real(symmetrize(p));
  const std::vector<Complex> coeffs(sym.coeffs.begin(), sym.coeffs.end());
  const auto roots = complex_roots(coeffs, tol);
  const auto clusters = cluster_roots(coeffs, roots);

  std::vector<SphereCandidate> out;
  for (const auto& c : clusters) {
    const double x = c.center.real();
    const double y = std::abs(c.center.imag());
    const double reach = 1e-7 * (1.0 + std::abs(c.center));
    auto hit = std::find_if(out.begin(), out.end(),
                            [&](const SphereCandidate& s) { return std::hypot(s.x - x, s.y - y) <= reach; });
    if (hit == out.end()) {
      out.push_back({x, y, c.multiplicity});
    } else {
      const double total = hit->multiplicity + c.multiplicity;
      hit->x = (hit->x * hit->multiplicity + x * c.multiplicity) / total;
      hit->y = (hit->y * hit->multiplicity + y * c.multiplicity) / total;
      hit->multiplicity += c.multiplicity;
    }
  }
  for (auto& s : out)
    if (s.y <= 1e-10 * (1.0 + std::abs(s.x))) s.y = 0.0;
  std::sort(out.begin(), out.end(), [](const SphereCandidate& l, const SphereCandidate& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  return out;
}

double evaluation_scale(const QPolynomial& p, double r) {
  double s = 0.0;
  double power = 1.0;
  for (const auto& q : p.coeffs()) {
    s += modulus(q) * power;
    power *= r;
  }
  return s;
}

SphereResolution resolve_sphere(const QPolynomial& p, double x, double y, double tol) {
  // Shape tolerance for the recovered unit I0; the residual check in
  // all_zeros is the final arbiter.
  constexpr double kUnitTol = 1e-6;
  using Kind = SphereResolution::Kind;

  const double threshold = tol * evaluation_scale(p, std::hypot(x, y));
  if (!(y > 0.0)) {
    const Quaternion v = evaluate(p, x);
    if (modulus(v) <= threshold) return {Kind::Isolated, Quaternion(x)};
    return {Kind::Empty, {}};
  }

  Quaternion a_part;
  Quaternion b_part;
  double alpha = 1.0;
  double beta = 0.0;
  for (const auto& q : p.coeffs()) {
    a_part += alpha * q;
    b_part += beta * q;
    const double next_alpha = x * alpha - y * beta;
    beta = y * alpha + x * beta;
    alpha = next_alpha;
  }

  const double ma = modulus(a_part);
  const double mb = modulus(b_part);
  if (ma <= threshold && mb <= threshold) return {Kind::WholeSphere, {}};
  if (mb <= threshold) return {Kind::Empty, {}};

  const Quaternion b_inv = inverse(b_part);
  const Quaternion unit = p.side() == Side::Right ? -(a_part * b_inv) : -(b_inv * a_part);
  if (std::abs(unit.w) > kUnitTol || std::abs(modulus(unit) - 1.0) > kUnitTol) return {Kind::Empty, {}};
  const double im = imag_modulus(unit);
  if (im == 0.0) return {Kind::Empty, {}};
  return {Kind::Isolated, Quaternion(x) + unit.imag() * (y / im)};
}

int ZeroSet::total_multiplicity() const {
  return std::accumulate(isolated_multiplicity.begin(), isolated_multiplicity.end(), 0) +
         std::accumulate(sphere_multiplicity.begin(), sphere_multiplicity.end(), 0);
}

ZeroSet all_zeros(const QPolynomial& p, double tol) {
  using Kind = SphereResolution::Kind;
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "a constant polynomial has no zeros to locate");

  ZeroSet zs;
  Sampler sampler(0x5EEDF00DULL);
  for (const auto& cand : candidate_spheres(p, tol)) {
    SphereResolution res = resolve_sphere(p, cand.x, cand.y, tol);
    if (res.kind == Kind::Empty && cand.y > 0.0 && cand.y < 1e-6 * (1.0 + std::abs(cand.x)))
      res = resolve_sphere(p, cand.x, 0.0, tol);

    const bool simple = cand.multiplicity <= 2;
    const int mult = std::max(1, cand.multiplicity / 2);
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << why << " at candidate (" << cand.x << ", " << cand.y << ") of multiplicity " << cand.multiplicity;
      if (simple) throw Error(ErrorCode::OracleInconsistent, os.str());
      throw NoConvergenceError(os.str(), {}, {});
    };

    switch (res.kind) {
      case Kind::Isolated: {
        const double r = modulus(evaluate(p, res.zero));
        if (r > tol * evaluation_scale(p, modulus(res.zero))) fail("isolated zero fails the residual check");
        zs.isolated.push_back(res.zero);
        zs.isolated_multiplicity.push_back(mult);
        zs.residual_max = std::max(zs.residual_max, r);
        break;
      }
      case Kind::WholeSphere: {
        const double limit = 2.0 * tol * evaluation_scale(p, std::hypot(cand.x, cand.y));
        for (int s = 0; s < 16; ++s) {
          const double r = modulus(evaluate(p, Quaternion(cand.x) + cand.y * sampler.unit_imaginary()));
          if (r > limit) fail("sphere fails the sampled residual check");
          zs.residual_max = std::max(zs.residual_max, r);
        }
        zs.spheres.emplace_back(cand.x, cand.y);
        zs.sphere_multiplicity.push_back(mult);
        break;
      }
      case Kind::Empty:
        fail("candidate locus carries no zero");
    }
  }
  return zs;
}

double max_zero_modulus(const ZeroSet& zs) {
  double m = 0.0;
  for (const auto& q : zs.isolated) m = std::max(m, modulus(q));
  for (const auto& [x, y] : zs.spheres) m = std::max(m, std::hypot(x, y));
  return m;
}

double max_zero_modulus(const QPolynomial& p, double tol) { return max_zero_modulus(all_zeros(p, tol)); }

}  // namespace qzb
