#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qzb/error.hpp"
#include "qzb/qpoly.hpp"
#include "qzb/roots.hpp"
#include "test_util.hpp"

using namespace qzb;
using namespace qzb::test;

namespace {

const Quaternion one{1.0};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("construction trims and validates") {
  const QPolynomial p({one, 2.0 * I, Quaternion{1e-20}});
  CHECK(p.degree() == 1);
  CHECK(code_of([] { QPolynomial({}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { QPolynomial({Quaternion{}, Quaternion{}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { QPolynomial({Quaternion{std::nan("")}, one}); }) == ErrorCode::InvalidInput);
  CHECK(QPolynomial::monomial(3).degree() == 3);
  CHECK(QPolynomial::monomial(3).leading() == one);
  CHECK(real_poly({1, 0, 1}).has_real_coefficients());
  CHECK_FALSE(QPolynomial({I, one}).has_real_coefficients());
}

TEST_CASE("evaluation") {
  for (Side side : {Side::Left, Side::Right}) {
    const auto p = real_poly({1, 0, 1}, side);
    CHECK(evaluate(p, I) == Quaternion{});
    const auto t = QPolynomial::monomial(1, side);
    const Quaternion q{0.3, -0.2, 1.5, 2.0};
    CHECK(evaluate(t, q) == q);
  }
  const QPolynomial right({Quaternion{}, J}, Side::Right), left({Quaternion{}, J}, Side::Left);
  CHECK(evaluate(right, I) == K);   // t j at t = i
  CHECK(evaluate(left, I) == -K);  // j t at t = i
}

TEST_CASE("star product") {
  const QPolynomial f({-I, one}), g({-J, one});
  const auto fg = star_mul(f, g);
  REQUIRE(fg.degree() == 2);
  CHECK(fg[0] == K);
  CHECK(fg[1] == -I - J);
  CHECK(fg[2] == one);
  CHECK(star_mul(g, f)[0] == -K);

  Sampler s(21);
  const auto h = random_poly(s, 3);
  CHECK(star_mul(h, QPolynomial({one})) == h);

  const auto a = real_poly({1, 2, 3}), b = real_poly({-1, 0.5});
  const auto ab = star_mul(a, b);
  const Quaternion t{0.4, 0.3, -0.7, 0.1};
  CHECK(qdist(evaluate(ab, t), evaluate(a, t) * evaluate(b, t)) <= 1e-14);

  CHECK_THROWS_AS(star_mul(QPolynomial({one}, Side::Left), QPolynomial({one}, Side::Right)), Error);
}

TEST_CASE("star product is associative and submultiplicative") {
  Sampler s(22);
  for (int n = 0; n < 1000; ++n) {
    const auto f = random_poly(s, s.integer(0, 4)), g = random_poly(s, s.integer(0, 4)), h = random_poly(s, s.integer(0, 4));
    const auto lhs = star_mul(star_mul(f, g), h), rhs = star_mul(f, star_mul(g, h));
    REQUIRE(lhs.degree() == rhs.degree());
    const double scale = lhs.max_coeff_modulus();
    for (int k = 0; k <= lhs.degree(); ++k) CHECK(qdist(lhs[k], rhs[k]) <= 1e-12 * scale);

    const auto fg = star_mul(f, g);
    for (int k = 0; k <= fg.degree(); ++k) {
      double bound = 0.0;
      for (int i = 0; i <= k; ++i)
        if (i <= f.degree() && k - i <= g.degree()) bound += modulus(f[i]) * modulus(g[k - i]);
      CHECK(modulus(fg[k]) <= bound * (1 + 1e-14));
    }
  }
}

TEST_CASE("conjugate polynomial") {
  const QPolynomial p({K, -I - J, one});
  const auto c = conj_poly(p);
  CHECK(c[0] == -K);
  CHECK(c[1] == I + J);
  CHECK(c[2] == one);
  CHECK(conj_poly(c) == p);
  const auto r = real_poly({1, 2, 3});
  CHECK(conj_poly(r) == r);
}

TEST_CASE("symmetrization") {
  const auto n = symmetrize(QPolynomial({-I, one}));
  CHECK(n == real_poly({1, 0, 1}));
  CHECK(symmetrize(real_poly({1, 0, 1})) == real_poly({1, 0, 2, 0, 1}));
  const auto r = real_poly({2, -1, 3});
  CHECK(symmetrize(r) == star_mul(r, r));

  Sampler s(23);
  for (int n2 = 0; n2 < 1000; ++n2) {
    const auto f = random_poly(s, s.integer(1, 8));
    const auto raw = star_mul(f, conj_poly(f));
    double imag = 0.0;
    for (const auto& c : raw.coeffs()) imag = std::max(imag, imag_modulus(c));
    CHECK(imag <= 1e-10 * raw.max_coeff_modulus());
    CHECK(symmetrize(f).has_real_coefficients());
  }
}

TEST_CASE("symmetrization vanishes at zeros of f") {
  Sampler s(24);
  for (int n = 0; n < 100; ++n) {
    const auto f = random_poly(s, s.integer(1, 6));
    const auto sym = symmetrize(f);
    for (const auto& z : all_zeros(f).isolated)
      CHECK(modulus(evaluate(sym, z)) <= 1e-8 * evaluation_scale(sym, modulus(z)));
  }
}

TEST_CASE("argument scaling") {
  CHECK(scale_argument(real_poly({1, 0, 1}), 2.0) == real_poly({1, 0, 4}));
  Sampler s(25);
  const auto p = random_poly(s, 4);
  CHECK(scale_argument(p, 1.0) == p);
  CHECK(code_of([&] { scale_argument(p, 0.0); }) == ErrorCode::NonPositiveScale);
  CHECK(code_of([&] { scale_argument(p, -1.0); }) == ErrorCode::NonPositiveScale);
  CHECK(max_zero_modulus(real_poly({1, 0, 1})) == doctest::Approx(1.0));
  CHECK(max_zero_modulus(real_poly({1, 0, 4})) == doctest::Approx(0.5));
}

TEST_CASE("side dual") {
  const auto d = side_dual(QPolynomial({K, one}, Side::Right));
  CHECK(d.side() == Side::Left);
  CHECK(d[0] == -K);
  CHECK(d[1] == one);
  const auto r = real_poly({1, 2, 3});
  CHECK(side_dual(r).side() == Side::Left);
  CHECK(std::equal(r.coeffs().begin(), r.coeffs().end(), side_dual(r).coeffs().begin()));

  const QPolynomial f({-I, one});
  CHECK(evaluate(f, I) == Quaternion{});
  CHECK(evaluate(side_dual(f), -I) == Quaternion{});

  Sampler s(26);
  for (int n = 0; n < 200; ++n) {
    const auto p = random_poly(s, s.integer(1, 5), s.integer(0, 1) ? Side::Left : Side::Right);
    const auto t = s.quaternion();
    CHECK(qdist(evaluate(side_dual(p), conj(t)), conj(evaluate(p, t))) <= 1e-14);
  }
}

TEST_CASE("zeros of f are zeros of f*g on the right-coefficient side") {
  Sampler s(27);
  for (int n = 0; n < 500; ++n) {
    const auto f = random_poly(s, s.integer(1, 3)), g = random_poly(s, s.integer(0, 3));
    const auto fg = star_mul(f, g);
    for (const auto& z : all_zeros(f).isolated)
      CHECK(modulus(evaluate(fg, z)) <= 1e-8 * evaluation_scale(fg, modulus(z)));
  }
}
