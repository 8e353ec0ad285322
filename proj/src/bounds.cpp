#include "qzb/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qzb/error.hpp"

namespace qzb {

namespace {

constexpr std::array<const char*, 12> kNames = {
    bound_name::kTheorem1, bound_name::kCorollary1, bound_name::kLemma4,  bound_name::kTheorem2,
    bound_name::kRemark1,  bound_name::kTheorem3,   bound_name::kTheorem4, bound_name::kTheorem5,
    bound_name::kTheorem6, bound_name::kCauchy,     bound_name::kGauss,    bound_name::kEnestromKakeya,
};

bool leq(double a, double b) { return a <= b + kChainSlack * std::max(std::abs(a), std::abs(b)); }

BoundReport inapplicable(const char* name, std::string why, std::map<std::string, double> params = {}) {
  BoundReport r;
  r.name = name;
  r.applicable = false;
  r.hypothesis_detail = std::move(why);
  r.parameters = std::move(params);
  return r;
}

BoundReport applicable(const char* name, double radius, std::string detail, std::map<std::string, double> params) {
  BoundReport r;
  r.name = name;
  r.applicable = true;
  r.hypothesis_detail = std::move(detail);
  r.parameters = std::move(params);
  if (radius < 0.0) {
    std::ostringstream os;
    os << r.hypothesis_detail << "; formula value " << radius << " is negative, reported as 0";
    r.hypothesis_detail = os.str();
    radius = 0.0;
  }
  r.radius = radius;
  return r;
}

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorCode::NonPositiveScale, "rho must be positive and finite");
}

void require_index(const char* what, int idx, int n) {
  if (idx < 0 || idx > n) {
    std::ostringstream os;
    os << what << " = " << idx << " outside 0.." << n;
    throw Error(ErrorCode::BadIndices, os.str());
  }
}

std::vector<double> moduli(const QPolynomial& p) {
  std::vector<double> m;
  for (const auto& q : p.coeffs()) m.push_back(modulus(q));
  return m;
}

/// Largest index below the degree with a nonzero coefficient, or 0.
int top_lower_index(const QPolynomial& p) {
  for (int j = p.degree() - 1; j > 0; --j)
    if (!(p[j] == Quaternion{})) return j;
  return 0;
}

std::optional<int> lacunary_violation(const QPolynomial& p, int l) {
  for (int j = l + 1; j < p.degree(); ++j)
    if (!(p[j] == Quaternion{})) return j;
  return std::nullopt;
}

/// First failing link of c_0 <= rho c_1 <= ... <= rho^peak c_peak >= ... >= rho^n c_n,
/// with c_0 >= 0 and rho^n c_n >= 0 (or > 0 when strict_last). `label` names the
/// sequence in the message.
std::optional<std::string> chain_violation(std::span<const double> c, double rho, int peak, const char* label,
                                           bool require_nonnegative, bool strict_last) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> w(c.size());
  for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = std::pow(rho, j) * c[static_cast<std::size_t>(j)];
  std::ostringstream os;
  os.precision(17);
  if (require_nonnegative && !(w.front() >= 0.0)) {
    os << label << "_0 >= 0 fails (" << w.front() << ")";
    return os.str();
  }
  if (strict_last && !(w.back() > 0.0)) {
    os << "rho^" << n << " " << label << "_" << n << " > 0 fails (" << w.back() << ")";
    return os.str();
  }
  if (require_nonnegative && !(w.back() >= 0.0)) {
    os << "rho^" << n << " " << label << "_" << n << " >= 0 fails (" << w.back() << ")";
    return os.str();
  }
  for (int j = 1; j <= n; ++j) {
    const double lo = j <= peak ? w[static_cast<std::size_t>(j - 1)] : w[static_cast<std::size_t>(j)];
    const double hi = j <= peak ? w[static_cast<std::size_t>(j)] : w[static_cast<std::size_t>(j - 1)];
    if (!leq(lo, hi)) {
      const int small = j <= peak ? j - 1 : j;
      const int large = j <= peak ? j : j - 1;
      os << "rho^" << small << " " << label << "_" << small << " <= rho^" << large << " " << label << "_" << large
         << " fails (" << lo << " > " << hi << ")";
      return os.str();
    }
  }
  return std::nullopt;
}

/// Every peak index for which the chain holds.
std::vector<int> valid_peaks(std::span<const double> c, double rho, bool require_nonnegative, bool strict_last) {
  std::vector<int> peaks;
  for (int k = 0; k < static_cast<int>(c.size()); ++k)
    if (!chain_violation(c, rho, k, "c", require_nonnegative, strict_last)) peaks.push_back(k);
  return peaks;
}

/// Bisection for the sign change of f on [lo, hi] (f(lo) < 0 < f(hi)).
template <class F>
double bisect(F f, double lo, double hi, double rel_width) {
  for (int it = 0; it < 2000 && hi - lo > rel_width * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double peak_term(double rho, int n, int peak, double peak_value, double denom) {
  return rho * (2.0 * std::pow(rho, peak) * peak_value / (std::pow(rho, n) * denom) - 1.0);
}

}  // namespace

std::span<const char* const> bound_names() { return kNames; }

ComponentProfile ComponentProfile::of(const QPolynomial& p) {
  ComponentProfile c;
  for (const auto& q : p.coeffs()) {
    c.alphas.push_back(q.w);
    c.betas.push_back(q.x);
    c.gammas.push_back(q.y);
    c.deltas.push_back(q.z);
  }
  return c;
}

double greatest_root_K(int n, int l) {
  if (n < 2 || l < 0 || l > n - 1) {
    std::ostringstream os;
    os << "need n >= 2 and 0 <= l <= n - 1, got n = " << n << ", l = " << l;
    throw Error(ErrorCode::BadIndices, os.str());
  }
  if (l == 0) return 1.0;
  const auto f = [n, l](double k) { return std::pow(k, n + 1) - std::pow(k, n) - std::pow(k, l + 1) + 1.0; };
  const auto df = [n, l](double k) {
    return (n + 1) * std::pow(k, n) - n * std::pow(k, n - 1) - (l + 1) * std::pow(k, l);
  };
  double root = bisect(f, 1.0 + 1e-12, 2.0, 1e-15);
  const double target = 1e-14 * std::pow(2.0, n + 1);
  for (int it = 0; it < 8 && std::abs(f(root)) > 0.0; ++it) {
    const double d = df(root);
    if (d == 0.0) break;
    const double next = root - f(root) / d;
    if (!(next > 1.0 && next <= 2.0)) break;
    if (std::abs(f(next)) >= std::abs(f(root))) break;
    root = next;
  }
  if (std::abs(f(root)) > target) {
    std::ostringstream os;
    os << "K-equation residual " << f(root) << " above " << target;
    throw Error(ErrorCode::NoConvergence, os.str());
  }
  return root;
}

BoundReport bound_theorem1(const QPolynomial& p, double rho, int l) {
  require_rho(rho);
  const int n = p.degree();
  std::map<std::string, double> params{{"rho", rho}, {"l", l}};
  if (n < 2) return inapplicable(bound_name::kTheorem1, "requires degree >= 2", params);
  require_index("l", l, n - 1);
  if (auto j = lacunary_violation(p, l)) {
    std::ostringstream os;
    os << "lacunary shape fails: q_" << *j << " != 0 with l = " << l;
    return inapplicable(bound_name::kTheorem1, os.str(), params);
  }
  const auto m = moduli(p);
  for (int j = 0; j <= l; ++j) {
    const double lhs = m[static_cast<std::size_t>(j)] * std::pow(rho, n - j);
    if (!leq(lhs, m.back())) {
      std::ostringstream os;
      os.precision(17);
      os << "|q_" << j << "| rho^" << n - j << " <= |q_n| fails (" << lhs << " > " << m.back() << ")";
      return inapplicable(bound_name::kTheorem1, os.str(), params);
    }
  }
  const double k1 = greatest_root_K(n, l);
  params["K1"] = k1;
  return applicable(bound_name::kTheorem1, k1 / rho, "|q_j| rho^{n-j} <= |q_n| for j <= l", params);
}

BoundReport bound_corollary1(const QPolynomial& p, double rho) {
  require_rho(rho);
  if (p.degree() < 2) return inapplicable(bound_name::kCorollary1, "requires degree >= 2", {{"rho", rho}});
  BoundReport r = bound_theorem1(p, rho, p.degree() - 1);
  r.name = bound_name::kCorollary1;
  return r;
}

BoundReport bound_lemma4(const QPolynomial& p, double r, int l) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::NonPositiveScale, "r must be positive and finite");
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::BadIndices, "requires degree >= 1");
  require_index("l", l, n - 1);
  std::map<std::string, double> params{{"r", r}, {"l", l}};
  if (auto j = lacunary_violation(p, l)) {
    std::ostringstream os;
    os << "lacunary shape fails: q_" << *j << " != 0 with l = " << l;
    return inapplicable(bound_name::kLemma4, os.str(), params);
  }
  const auto m = moduli(p);
  double sum = 0.0;
  for (int j = 0; j <= l; ++j) sum += m[static_cast<std::size_t>(j)] / m.back() / std::pow(r, n - j - 1);
  return applicable(bound_name::kLemma4, std::max(r, sum), "holds for every r > 0", params);
}

OptimalRadius optimize_r(const QPolynomial& p, int l) {
  const int n = p.degree();
  if (n < 2) throw Error(ErrorCode::BadIndices, "optimize_r requires degree >= 2");
  require_index("l", l, n - 1);
  if (auto j = lacunary_violation(p, l)) {
    std::ostringstream os;
    os << "q_" << *j << " != 0 above l = " << l;
    throw Error(ErrorCode::BadIndices, os.str());
  }
  const auto m = moduli(p);
  bool any = false;
  for (int j = 0; j <= l; ++j) any = any || m[static_cast<std::size_t>(j)] > 0.0;
  if (!any) throw Error(ErrorCode::DegenerateAllZero, "q_0 .. q_l all vanish; the radius tends to 0 with r");

  // Decreasing in r; the optimum sits where it crosses 1.
  const auto excess = [&](double r) {
    double s = 0.0;
    for (int j = 0; j <= l; ++j) s += m[static_cast<std::size_t>(j)] / m.back() / std::pow(r, n - j);
    return 1.0 - s;
  };
  double lo = 1e-8;
  while (excess(lo) > 0.0 && lo > 1e-300) lo *= 0.5;
  double hi = 1.0;
  while (excess(hi) <= 0.0) hi *= 2.0;
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const BoundReport at = bound_lemma4(p, hi, l);
  return {hi, *at.radius};
}

BoundReport bound_cauchy(const QPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::BadIndices, "requires degree >= 1");
  const auto m = moduli(p);
  double largest = 0.0;
  for (int j = 0; j < n; ++j) largest = std::max(largest, m[static_cast<std::size_t>(j)] / m.back());
  return applicable(bound_name::kCauchy, 1.0 + largest, "unconditional", {{"max_ratio", largest}});
}

BoundReport bound_gauss(const QPolynomial& p) {
  const int n = p.degree();
  if (!p.has_real_coefficients()) return inapplicable(bound_name::kGauss, "coefficients are not all real");
  const double lead = p.leading().w;
  double radius = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double a = std::abs(p[n - k].w / lead);
    if (a == 0.0) continue;
    radius = std::max(radius, std::pow(n * std::numbers::sqrt2 * a, 1.0 / k));
  }
  return applicable(bound_name::kGauss, radius, "real coefficients", {});
}

BoundReport bound_gauss1849(const QPolynomial& p) {
  const int n = p.degree();
  // Common slice: all imaginary parts parallel.
  Quaternion axis;
  for (const auto& q : p.coeffs()) {
    const Quaternion im = q.imag();
    if (imag_modulus(im) == 0.0) continue;
    if (imag_modulus(axis) == 0.0) {
      axis = im;
      continue;
    }
    const Quaternion cross = im * axis - axis * im;
    if (modulus(cross) > 1e-12 * modulus(im) * modulus(axis)) {
      BoundReport r = inapplicable(bound_name::kGauss1849, "coefficients do not lie in one complex slice");
      r.advisory = true;
      return r;
    }
  }
  const double lead = modulus(p.leading());
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);  // a[i] = |coefficient of t^{n-i}| / |q_n|
  for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i)] = modulus(p[n - i]) / lead;
  const auto f = [&](double z) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) s += a[static_cast<std::size_t>(i)] * std::pow(z, i - 1);
    return std::pow(z, n) - std::numbers::sqrt2 * s;
  };
  double radius = 0.0;
  if (std::any_of(a.begin() + 1, a.end(), [](double v) { return v > 0.0; })) {
    double hi = 1.0;
    while (f(hi) <= 0.0) hi *= 2.0;
    radius = bisect(f, 0.0, hi, 1e-14);
  }
  BoundReport r = applicable(bound_name::kGauss1849, radius, "advisory: indexing as printed is suspect", {});
  r.advisory = true;
  return r;
}

BoundReport check_enestrom_kakeya(const QPolynomial& p) {
  if (!p.has_real_coefficients()) return inapplicable(bound_name::kEnestromKakeya, "coefficients are not all real");
  const int n = p.degree();
  if (!(p[0].w >= 0.0)) return inapplicable(bound_name::kEnestromKakeya, "q_0 >= 0 fails");
  if (!(p.leading().w > 0.0)) return inapplicable(bound_name::kEnestromKakeya, "q_n > 0 fails");
  for (int j = 1; j <= n; ++j) {
    if (!leq(p[j - 1].w, p[j].w)) {
      std::ostringstream os;
      os << "q_" << j - 1 << " <= q_" << j << " fails (" << p[j - 1].w << " > " << p[j].w << ")";
      return inapplicable(bound_name::kEnestromKakeya, os.str());
    }
  }
  return applicable(bound_name::kEnestromKakeya, 1.0, "0 <= q_0 <= ... <= q_n", {});
}

BoundReport bound_theorem2(const QPolynomial& p, double rho, int k) {
  require_rho(rho);
  const int n = p.degree();
  require_index("k", k, n);
  std::map<std::string, double> params{{"rho", rho}, {"k", k}};
  const auto m = moduli(p);
  if (auto why = chain_violation(m, rho, k, "|q|", false, false))
    return inapplicable(bound_name::kTheorem2, *why, params);
  double correction = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double off_axis = modulus(p[j] - Quaternion(m[static_cast<std::size_t>(j)]));
    correction += off_axis / (std::pow(rho, n - j - 1) * m.back());
  }
  const double radius = peak_term(rho, n, k, m[static_cast<std::size_t>(k)], m.back()) + 2.0 * correction;
  return applicable(bound_name::kTheorem2, radius, "up-down modulus chain with peak k", params);
}

std::optional<ConeCertificate> certify_cone(const QPolynomial& p, std::optional<Quaternion> gamma) {
  std::vector<Quaternion> candidates;
  if (gamma) {
    candidates.push_back(*gamma);
  } else {
    Quaternion sum;
    for (const auto& q : p.coeffs()) {
      if (!(q == Quaternion{})) candidates.push_back(q);
      sum += q;
    }
    candidates.push_back(sum);
  }
  std::optional<ConeCertificate> best;
  for (const auto& g : candidates) {
    if (modulus(g) == 0.0) continue;
    double widest = 0.0;
    for (const auto& q : p.coeffs())
      if (!(q == Quaternion{})) widest = std::max(widest, angle(q, g));
    if (!best || widest < best->theta) best = ConeCertificate{g, widest};
  }
  return best;
}

BoundReport bound_remark1(const QPolynomial& p, double rho, int k, double theta, std::optional<Quaternion> gamma) {
  require_rho(rho);
  const int n = p.degree();
  require_index("k", k, n);
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) throw Error(ErrorCode::BadIndices, "theta must lie in [0, pi/2]");
  std::map<std::string, double> params{{"rho", rho}, {"k", k}, {"theta", theta}};
  const auto m = moduli(p);
  if (auto why = chain_violation(m, rho, k, "|q|", false, false))
    return inapplicable(bound_name::kRemark1, *why, params);

  const auto cone = certify_cone(p, gamma);
  if (!cone || cone->theta > theta + kChainSlack) {
    std::ostringstream os;
    os << "no candidate gamma keeps every coefficient within angle " << theta;
    if (cone) os << " (best half-angle " << cone->theta << ")";
    throw Error(ErrorCode::HypothesisViolated, os.str());
  }
  params["gamma_w"] = cone->gamma.w;
  params["gamma_x"] = cone->gamma.x;
  params["gamma_y"] = cone->gamma.y;
  params["gamma_z"] = cone->gamma.z;

  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += m[static_cast<std::size_t>(j)] / (std::pow(rho, n - j - 1) * m.back());
  const double chain = 2.0 * std::pow(rho, k) * m[static_cast<std::size_t>(k)] / (std::pow(rho, n) * m.back()) - 1.0;
  const double radius = rho * (chain * std::cos(theta) + std::sin(theta)) + 2.0 * std::sin(theta) * sum;
  return applicable(bound_name::kRemark1, radius, "modulus chain and angle cone around gamma", params);
}

namespace {

struct ComponentChain {
  const std::vector<double>* values;
  const char* label;
  const char* index_name;
  int peak;
};

/// Shared driver for the component-wise bounds: checks every chain, then
/// sums the peak terms and the residual sum over the unconstrained components.
BoundReport component_bound(const char* name, const QPolynomial& p, double rho, std::span<const ComponentChain> chains,
                            std::span<const std::vector<double>* const> residual, bool alpha_denominator) {
  require_rho(rho);
  const int n = p.degree();
  std::map<std::string, double> params{{"rho", rho}};
  for (const auto& c : chains) {
    require_index(c.index_name, c.peak, n);
    params[c.index_name] = c.peak;
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& c = chains[i];
    if (auto why = chain_violation(*c.values, rho, c.peak, c.label, true, i == 0)) return inapplicable(name, *why, params);
  }
  const auto& alphas = *chains.front().values;
  const double denom = alpha_denominator ? alphas.back() : modulus(p.leading());
  double radius = 0.0;
  for (const auto& c : chains)
    radius += peak_term(rho, n, c.peak, (*c.values)[static_cast<std::size_t>(c.peak)], denom);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    double mass = 0.0;
    for (const auto* comp : residual) mass += std::abs((*comp)[static_cast<std::size_t>(j)]);
    sum += mass / std::pow(rho, n - j - 1);
  }
  radius += 2.0 / denom * sum;
  return applicable(name, radius, "component chains hold", params);
}

}  // namespace

BoundReport bound_theorem3(const QPolynomial& p, double rho, int k) {
  const auto c = ComponentProfile::of(p);
  const ComponentChain chains[] = {{&c.alphas, "alpha", "k", k}};
  const std::vector<double>* residual[] = {&c.betas, &c.gammas, &c.deltas};
  return component_bound(bound_name::kTheorem3, p, rho, chains, residual, true);
}

BoundReport bound_theorem4(const QPolynomial& p, double rho, int k, int r) {
  const auto c = ComponentProfile::of(p);
  const ComponentChain chains[] = {{&c.alphas, "alpha", "k", k}, {&c.betas, "beta", "r", r}};
  const std::vector<double>* residual[] = {&c.gammas, &c.deltas};
  return component_bound(bound_name::kTheorem4, p, rho, chains, residual, false);
}

BoundReport bound_theorem5(const QPolynomial& p, double rho, int k, int r, int s) {
  const auto c = ComponentProfile::of(p);
  const ComponentChain chains[] = {
      {&c.alphas, "alpha", "k", k}, {&c.betas, "beta", "r", r}, {&c.gammas, "gamma", "s", s}};
  const std::vector<double>* residual[] = {&c.deltas};
  return component_bound(bound_name::kTheorem5, p, rho, chains, residual, false);
}

BoundReport bound_theorem6(const QPolynomial& p, double rho, int k, int r, int s, int l) {
  const auto c = ComponentProfile::of(p);
  const ComponentChain chains[] = {{&c.alphas, "alpha", "k", k},
                                   {&c.betas, "beta", "r", r},
                                   {&c.gammas, "gamma", "s", s},
                                   {&c.deltas, "delta", "l", l}};
  return component_bound(bound_name::kTheorem6, p, rho, chains, {}, false);
}

std::vector<double> default_rho_grid() {
  std::vector<double> grid;
  for (int i = -6; i <= 6; ++i) grid.push_back(std::pow(2.0, 0.5 * i));
  return grid;
}

std::vector<BoundReport> all_bound_reports(const QPolynomial& p, std::span<const double> rho_grid) {
  std::vector<BoundReport> out;
  const int n = p.degree();
  const auto m = moduli(p);
  const auto comps = ComponentProfile::of(p);

  out.push_back(bound_cauchy(p));
  out.push_back(bound_gauss(p));
  out.push_back(check_enestrom_kakeya(p));
  out.push_back(bound_gauss1849(p));

  if (n >= 2) {
    const int l = top_lower_index(p);
    // Largest rho satisfying |q_j| rho^{n-j} <= |q_n|; for a pure power every rho works.
    auto rho_limit = [&](int upto) {
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j <= upto; ++j)
        if (m[static_cast<std::size_t>(j)] > 0.0)
          best = std::min(best, std::pow(m.back() / m[static_cast<std::size_t>(j)], 1.0 / (n - j)));
      return best;
    };
    for (int variant = 0; variant < 2; ++variant) {
      const int upto = variant == 0 ? l : n - 1;
      std::vector<double> rhos(rho_grid.begin(), rho_grid.end());
      const double limit = rho_limit(upto);
      if (std::isfinite(limit)) rhos.push_back(limit);
      for (double rho : rhos)
        out.push_back(variant == 0 ? bound_theorem1(p, rho, l) : bound_corollary1(p, rho));
    }
    try {
      const auto opt = optimize_r(p, l);
      BoundReport r = bound_lemma4(p, opt.r_star, l);
      r.parameters["r_star"] = opt.r_star;
      out.push_back(std::move(r));
    } catch (const Error& e) {
      out.push_back(inapplicable(bound_name::kLemma4, e.what(), {{"l", l}}));
    }
  }

  const auto cone = certify_cone(p);
  for (double rho : rho_grid) {
    for (int k = 0; k <= n; ++k) out.push_back(bound_theorem2(p, rho, k));
    for (int k = 0; k <= n; ++k) {
      if (!cone || cone->theta > std::numbers::pi / 2) {
        out.push_back(inapplicable(bound_name::kRemark1, "no candidate gamma within pi/2 of every coefficient",
                                   {{"rho", rho}, {"k", k}}));
        continue;
      }
      out.push_back(bound_remark1(p, rho, k, cone->theta));
    }

    // The component radii separate into one term per chain, and a chain's
    // admissible peaks all carry the same maximal weight, so the first
    // admissible peak of each chain is as good as any.
    const auto ks = valid_peaks(comps.alphas, rho, true, true);
    const auto rs = valid_peaks(comps.betas, rho, true, false);
    const auto ss = valid_peaks(comps.gammas, rho, true, false);
    const auto ls = valid_peaks(comps.deltas, rho, true, false);
    const int k = ks.empty() ? n : ks.front();
    const int r = rs.empty() ? n : rs.front();
    const int s = ss.empty() ? n : ss.front();
    const int l = ls.empty() ? n : ls.front();
    out.push_back(bound_theorem3(p, rho, k));
    out.push_back(bound_theorem4(p, rho, k, r));
    out.push_back(bound_theorem5(p, rho, k, r, s));
    out.push_back(bound_theorem6(p, rho, k, r, s, l));
  }
  return out;
}

std::vector<BoundReport> scan_bounds(const QPolynomial& p, std::span<const double> rho_grid) {
  const auto reports = all_bound_reports(p, rho_grid);
  std::vector<BoundReport> best;
  auto consider = [&](const BoundReport& r) {
    auto it = std::find_if(best.begin(), best.end(), [&](const BoundReport& b) { return b.name == r.name; });
    if (it == best.end()) {
      best.push_back(r);
    } else if (r.applicable && (!it->applicable || *r.radius < *it->radius)) {
      *it = r;
    }
  };
  for (const auto& r : reports) consider(r);
  for (const char* name : kNames)
    if (std::none_of(best.begin(), best.end(), [&](const BoundReport& b) { return b.name == name; }))
      best.push_back(inapplicable(name, "requires degree >= 2"));

  std::vector<BoundReport> ordered;
  for (const char* name : kNames)
    for (const auto& b : best)
      if (b.name == name) ordered.push_back(b);
  for (const auto& b : best)
    if (b.advisory) ordered.push_back(b);
  return ordered;
}

BoundReport best_bound(const QPolynomial& p, std::span<const double> rho_grid) {
  const auto reports = scan_bounds(p, rho_grid);
  const BoundReport* winner = nullptr;
  for (const auto& r : reports) {
    if (!r.applicable || r.advisory) continue;
    if (!winner || *r.radius < *winner->radius) winner = &r;
  }
  BoundReport out = *winner;
  out.hypothesis_detail = "smallest applicable radius, won by " + out.name + ": " + out.hypothesis_detail;
  return out;
}

}  // namespace qzb
