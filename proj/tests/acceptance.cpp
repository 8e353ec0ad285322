// Acceptance criteria 1-8. One PASS/FAIL line per criterion, followed by
// indented detail lines; exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qzb/bounds.hpp"
#include "qzb/companion.hpp"
#include "qzb/harness.hpp"
#include "qzb/qpoly.hpp"
#include "qzb/random.hpp"
#include "qzb/roots.hpp"

using namespace qzb;

namespace {

constexpr double kSlack = 1e-9;
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    passed = false;
    details.push_back(why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

QPolynomial random_poly(Sampler& s, int degree, Side side) {
  std::vector<Quaternion> q;
  for (int j = 0; j <= degree; ++j) q.push_back(s.quaternion());
  return QPolynomial(std::move(q), side);
}

Outcome soundness_sweep() {
  Outcome out;
  const Family families[] = {Family::Thm1, Family::Cor1, Family::Thm2, Family::Remark1, Family::Thm3,
                             Family::Thm4, Family::Thm5, Family::Thm6, Family::EK,      Family::Dense};
  const double rhos[] = {0.5, 1.0, 2.0};
  const BenchOptions options;
  std::map<std::string, std::pair<int, int>> per_bound;  // violations, applicable
  int skipped = 0, total = 0;
  for (Family f : families) {
    std::map<std::string, int> family_violations;
    for (int degree = 2; degree <= 8; ++degree) {
      const FamilySpec spec{f, degree, rhos[degree % 3], 1000u + static_cast<std::uint64_t>(degree), 500, std::nullopt};
      for (int i = 0; i < spec.count; ++i) {
        const auto row = bench_row(spec, i, options);
        ++total;
        if (row.skipped) {
          ++skipped;
          continue;
        }
        for (const auto& r : row.reports) {
          if (!r.applicable) continue;
          auto& t = per_bound[r.name];
          ++t.second;
          if (*r.radius < row.oracle_max_modulus - kSlack * *r.radius) {
            ++t.first;
            ++family_violations[r.name];
          }
        }
      }
    }
    for (const auto& [name, count] : family_violations)
      out.fail("family " + to_string(f) + ": " + name + " violated in " + std::to_string(count) + " polynomials");
  }
  for (const char* name : bound_names()) {
    const auto [bad, applicable] = per_bound[name];
    out.note(std::string(name) + ": " + std::to_string(bad) + " violations / " + std::to_string(applicable) + " applicable");
  }
  out.note(std::to_string(total) + " polynomials, " + std::to_string(skipped) + " skipped by the oracle");
  if (skipped) out.fail(std::to_string(skipped) + " oracle failures");
  return out;
}

Outcome extremal_sharpness() {
  Outcome out;
  for (double rho : {0.5, 1.0, 2.0}) {
    for (int n = 2; n <= 8; ++n) {
      const auto g = generate_one({Family::Extremal, n, rho, 0, 1, n - 1}, 0);
      const double k1 = greatest_root_K(n, n - 1);
      const double residual = std::pow(k1, n + 1) - 2 * std::pow(k1, n) + 1;
      if (std::abs(residual) > 1e-12 * std::pow(2.0, n + 1)) out.fail("K1 residual " + fmt(residual) + " at n=" + std::to_string(n));
      const double m = max_zero_modulus(g.poly);
      const double want = k1 / rho;
      if (std::abs(m - want) > 1e-6 * want)
        out.fail("rho=" + fmt(rho) + " n=" + std::to_string(n) + ": oracle " + fmt(m) + " vs K1/rho " + fmt(want));
    }
  }
  const double m2 = max_zero_modulus(generate_one({Family::Extremal, 2, 1.0, 0, 1, 1}, 0).poly);
  if (std::abs(m2 - kPhi) > 1e-12 || std::abs(greatest_root_K(2, 1) - kPhi) > 1e-12)
    out.fail("n=2, rho=1 does not reproduce the golden ratio");
  out.note("21 (rho, n) pairs plus the closed form at n=2");
  return out;
}

Outcome enestrom_kakeya() {
  Outcome out;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int degree = 2 + i % 7;
    const auto g = generate_one({Family::EK, degree, 1.0, 31337, 500, std::nullopt}, i);
    const double m = max_zero_modulus(g.poly);
    worst = std::max(worst, m);
    if (m > 1.0 + kSlack) out.fail("seed_index " + std::to_string(i) + ": zero modulus " + fmt(m) + " > 1");
    const auto r = bound_theorem2(g.poly, 1.0, degree);
    if (!r.applicable || *r.radius != 1.0) out.fail("seed_index " + std::to_string(i) + ": modulus-chain bound is not exactly 1");
  }
  out.note("largest zero modulus " + fmt(worst));
  return out;
}

Outcome spherical_zero() {
  Outcome out;
  const auto p = QPolynomial::from_real(std::vector<double>{1, 0, 1});
  const auto zs = all_zeros(p);
  if (!zs.isolated.empty()) out.fail(std::to_string(zs.isolated.size()) + " isolated zeros reported");
  if (zs.spheres.size() != 1)
    out.fail(std::to_string(zs.spheres.size()) + " spheres reported");
  else if (std::abs(zs.spheres[0].first) > 1e-12 || std::abs(zs.spheres[0].second - 1.0) > 1e-12)
    out.fail("sphere at (" + fmt(zs.spheres[0].first) + ", " + fmt(zs.spheres[0].second) + ")");
  Sampler s(4);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) worst = std::max(worst, modulus(evaluate(p, s.unit_imaginary())));
  if (worst > 1e-12) out.fail("|P(I)| up to " + fmt(worst));
  out.note("max |P(I)| over 100 unit imaginaries " + fmt(worst));
  return out;
}

Outcome gershgorin_containment() {
  Outcome out;
  Sampler s(5);
  int points = 0, outside = 0;
  for (int i = 0; i < 500; ++i) {
    const auto p = random_poly(s, s.integer(1, 8), s.integer(0, 1) ? Side::Left : Side::Right);
    const auto zs = all_zeros(p);
    std::vector<Quaternion> pts = zs.isolated;
    for (const auto& [x, y] : zs.spheres)
      for (int k = 0; k < 4; ++k) pts.push_back(Quaternion{x} + y * s.unit_imaginary());
    const auto c = build_companion(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> d(static_cast<std::size_t>(c.size()));
      for (auto& v : d) v = std::exp(s.uniform(-3.0, 3.0));
      const auto balls = gershgorin_balls(diag_similarity(c, d));
      for (const auto& z : pts) {
        ++points;
        bool inside = false;
        for (const auto& b : balls) inside = inside || distance(z, b.center) <= b.radius + kSlack * std::max(1.0, b.radius);
        if (!inside) ++outside;
      }
    }
  }
  if (outside) out.fail(std::to_string(outside) + " of " + std::to_string(points) + " zero/scaling pairs outside");
  out.note(std::to_string(points) + " zero/scaling pairs checked");
  return out;
}

Outcome oracle_consistency() {
  Outcome out;
  Sampler s(6);
  int miscounted = 0;
  double residual = 0.0, duality = 0.0, scaling = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int degree = s.integer(2, 8);
    const auto p = random_poly(s, degree, s.integer(0, 1) ? Side::Left : Side::Right);
    const double rho = s.uniform(0.25, 4.0);
    try {
      const auto zs = all_zeros(p);
      if (zs.total_multiplicity() != degree) ++miscounted;
      const double r = max_zero_modulus(zs);
      const double scale = p.max_coeff_modulus() * std::pow(std::max(1.0, r), degree);
      for (const auto& z : zs.isolated) residual = std::max(residual, modulus(evaluate(p, z)) / scale);

      auto dual = all_zeros(side_dual(p));
      for (auto& z : dual.isolated) z = conj(z);
      duality = std::max(duality, zero_set_mismatch(zs, dual));

      auto scaled = all_zeros(scale_argument(p, rho));
      for (auto& z : scaled.isolated) z = rho * z;
      for (auto& [x, y] : scaled.spheres) x *= rho, y *= rho;
      scaling = std::max(scaling, zero_set_mismatch(zs, scaled) / (1.0 + r));
    } catch (const Error& e) {
      out.fail(std::string("oracle failure: ") + e.what());
    }
  }
  if (miscounted) out.fail(std::to_string(miscounted) + " polynomials with zero count != degree");
  if (residual > 1e-8) out.fail("relative residual " + fmt(residual));
  if (duality > 1e-8) out.fail("conjugation duality mismatch " + fmt(duality));
  if (scaling > 1e-8) out.fail("argument scaling mismatch " + fmt(scaling));
  out.note("worst residual " + fmt(residual) + ", duality " + fmt(duality) + ", scaling " + fmt(scaling));
  return out;
}

Outcome star_algebra() {
  Outcome out;
  Sampler s(7);
  double assoc = 0.0, imag = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_poly(s, s.integer(0, 4), Side::Right);
    const auto g = random_poly(s, s.integer(0, 4), Side::Right);
    const auto h = random_poly(s, s.integer(0, 4), Side::Right);
    const auto lhs = star_mul(star_mul(f, g), h), rhs = star_mul(f, star_mul(g, h));
    if (lhs.degree() != rhs.degree()) {
      out.fail("degree mismatch");
      continue;
    }
    const double scale = lhs.max_coeff_modulus();
    for (int k = 0; k <= lhs.degree(); ++k) assoc = std::max(assoc, modulus(lhs[k] - rhs[k]) / scale);

    const auto p = random_poly(s, s.integer(1, 8), Side::Right);
    const auto raw = star_mul(p, conj_poly(p));
    for (const auto& c : raw.coeffs()) imag = std::max(imag, imag_modulus(c) / raw.max_coeff_modulus());
  }
  const Quaternion one{1.0};
  const QPolynomial a({-Quaternion::i(), one}), b({-Quaternion::j(), one});
  if (!(star_mul(a, b)[0] == Quaternion::k()) || !(star_mul(b, a)[0] == -Quaternion::k()))
    out.fail("(t-i)*(t-j) and (t-j)*(t-i) constant terms are not k and -k");
  if (assoc > 1e-12) out.fail("associativity error " + fmt(assoc));
  if (imag > 1e-10) out.fail("symmetrization imaginary part " + fmt(imag));
  out.note("associativity " + fmt(assoc) + ", symmetrization imaginary part " + fmt(imag));
  return out;
}

Outcome unit_values() {
  Outcome out;
  const double cauchy = *bound_cauchy(QPolynomial::from_real(std::vector<double>{1, 0, 1})).radius;
  if (cauchy != 2.0) out.fail("cauchy(t^2+1) = " + fmt(cauchy));
  const double k = greatest_root_K(2, 1);
  if (std::abs(k - kPhi) > 1e-12) out.fail("K(2,1) = " + fmt(k));
  for (int n = 2; n <= 8; ++n) {
    for (double c : {1e-3, 0.2, 0.9, 1.0}) {
      std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
      a.front() = c;
      a.back() = 1.0;
      const double radius = optimize_r(QPolynomial::from_real(a), 0).radius;
      const double want = std::pow(c, 1.0 / n);
      if (std::abs(radius - want) > 1e-10 * want)
        out.fail("optimize_r(t^" + std::to_string(n) + " + " + fmt(c) + ") = " + fmt(radius));
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "soundness sweep over ten families, degrees 2-8, 500 each", soundness_sweep},
      {2, "lacunary bound is sharp on the extremal family", extremal_sharpness},
      {3, "Enestrom-Kakeya recovery on 500 monotone real polynomials", enestrom_kakeya},
      {4, "t^2 + 1 vanishes on exactly the unit sphere of imaginary units", spherical_zero},
      {5, "zeros lie in Gershgorin balls under 20 random diagonal scalings", gershgorin_containment},
      {6, "oracle self-consistency on 1000 dense polynomials", oracle_consistency},
      {7, "star-product algebra", star_algebra},
      {8, "bound formula unit values", unit_values},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s: %s (%.1fs)\n", c.id, o.passed ? "PASS" : "FAIL", c.title, secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
