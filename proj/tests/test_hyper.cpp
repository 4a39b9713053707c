#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polya/hyper.hpp>
#include <polya/poly.hpp>

#include "test_util.hpp"

using polya::HyperParams;
using polya::Poly1;
using polya::PowerSeries;
using polya::Rat;

TEST_CASE("pochhammer") {
  CHECK(polya::pochhammer(Rat(1), 4) == Rat(24));
  CHECK(polya::pochhammer(Rat(-7, 3), 0) == Rat(1));
  CHECK(polya::pochhammer(Rat(1, 2), 3) == Rat(15, 8));  // (1/2)(3/2)(5/2)
  CHECK_THROWS_AS(polya::pochhammer(Rat(1), -1), polya::InvalidParamsError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HyperParams({Rat(1), Rat(2)}, {Rat(3)}).validate(), polya::InvalidParamsError);
  CHECK_THROWS_AS(HyperParams({Rat(1)}, {Rat(0), Rat(2)}).validate(), polya::InvalidParamsError);
  CHECK_THROWS_AS(HyperParams({Rat(1)}, {Rat(-3), Rat(2)}).validate(), polya::InvalidParamsError);
  CHECK_THROWS_AS(HyperParams({Rat(-2)}, {Rat(1), Rat(2)}).validate(), polya::InvalidParamsError);
  CHECK_NOTHROW(HyperParams({Rat(-1, 2)}, {Rat(1)}).validate());  // negative non-integer is fine
  HyperParams poly_mode{{Rat(-2)}, {Rat(1), Rat(2)}};
  poly_mode.polynomial_mode = true;
  CHECK_NOTHROW(poly_mode.validate());
}

TEST_CASE("parameter string parsing") {
  const auto p = HyperParams::parse("3/2;1,2");
  CHECK(p.upper == std::vector<Rat>{Rat(3, 2)});
  CHECK(p.lower == std::vector<Rat>{Rat(1), Rat(2)});
  const auto q = HyperParams::parse(";1/2,7");  // p = 0
  CHECK(q.upper.empty());
  CHECK(q.lower.size() == 2);
  CHECK(q.str() == ";1/2,7");
  CHECK_THROWS_AS(HyperParams::parse("1;0,2"), polya::InvalidParamsError);
  CHECK_THROWS_AS(HyperParams::parse("1,2"), polya::InvalidParamsError);
  CHECK_THROWS_AS(HyperParams::parse("1;2;3"), polya::InvalidParamsError);
}

TEST_CASE("pfq series coefficients") {
  // 1F1(1;1;x) = e^x
  CHECK(pfq_series(HyperParams{{Rat(1)}, {Rat(1)}}, 4) == polya::exp_series(Rat(1), 4));
  // 0F1(-;1;x): coefficient of x^3 is 1/(3!)^2
  CHECK(pfq_series(HyperParams{{}, {Rat(1)}}, 3)[3] == Rat(1, 36));
  // 1F2(3/2; 1, 2; x): coefficient of x is (3/2)/(1*2)
  CHECK(pfq_series(HyperParams{{Rat(3, 2)}, {Rat(1), Rat(2)}}, 1)[1] == Rat(3, 4));
}

TEST_CASE("property: upper-lower cancellation and positivity") {
  testutil::RatGen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Rat a = gen.positive();
    const Rat b = gen.positive();
    // pFq with a repeated parameter reduces: 1F2(a; a, b) = 0F1(-; b)
    CHECK(pfq_series(HyperParams{{a}, {a, b}}, 10) == pfq_series(HyperParams{{}, {b}}, 10));
    const auto f = pfq_series(HyperParams{{a}, {b, gen.positive()}}, 10);
    for (int n = 0; n <= 10; ++n) CHECK(f[n] > Rat(0));
  }
}

TEST_CASE("signed log-derivative moments") {
  // e^x: f'/f = 1
  const auto s = signed_logderiv_moments(HyperParams{{Rat(1)}, {Rat(1)}}, 6);
  CHECK(s[0] == Rat(1));
  for (int n = 1; n <= 6; ++n) CHECK(s[n].is_zero());

  // 1F2(a; b1, b2): s_0 = a/(b1 b2) and
  // s_1 = a [a(1+b1+b2) - b1 b2] / (b1^2 (b1+1) b2^2 (b2+1))
  testutil::RatGen gen(53);
  for (int trial = 0; trial < 15; ++trial) {
    const Rat a = gen.positive(), b1 = gen.positive(), b2 = gen.positive();
    const auto m = signed_logderiv_moments(HyperParams{{a}, {b1, b2}}, 1);
    CHECK(m[0] == a / (b1 * b2));
    const Rat s1 = a * (a * (Rat(1) + b1 + b2) - b1 * b2) /
                   (b1 * b1 * (b1 + Rat(1)) * b2 * b2 * (b2 + Rat(1)));
    CHECK(m[1] == s1);
  }
  // the worked instance: 1F2(3/2; 1, 2), s_0 = 3/4
  CHECK(signed_logderiv_moments(HyperParams{{Rat(3, 2)}, {Rat(1), Rat(2)}}, 0)[0] == Rat(3, 4));
}

namespace {

// Independent oracle for e^{-x} 1F1(b+m;b;x): direct convolution of the two
// coefficient formulas, no series machinery involved.
Rat laguerre_oracle_coeff(const Rat& b, int m, int k) {
  Rat acc(0);
  for (int n = 0; n <= k; ++n) {
    Rat term = polya::pochhammer(b + Rat(m), n) /
               (polya::pochhammer(b, n) * polya::pochhammer(Rat(1), n));
    Rat rest = Rat((k - n) % 2 == 0 ? 1 : -1) / polya::pochhammer(Rat(1), k - n);
    acc += term * rest;
  }
  return acc;
}

}  // namespace

TEST_CASE("laguerre reduction") {
  CHECK(polya::laguerre_reduction(Rat(1), 0) == Poly1::constant(Rat(1), "x"));
  // 1F1(2;1;x) = (1+x) e^x
  CHECK(polya::laguerre_reduction(Rat(1), 1) == Poly1({Rat(1), Rat(1)}, "x"));
  // series oracle: 1F1(3;2;x) e^{-x} = 1 + x/2
  Poly1 expected({laguerre_oracle_coeff(Rat(2), 1, 0), laguerre_oracle_coeff(Rat(2), 1, 1)}, "x");
  CHECK(expected == Poly1({Rat(1), Rat(1, 2)}, "x"));
  CHECK(polya::laguerre_reduction(Rat(2), 1) == expected);
  for (int k = 2; k <= 8; ++k) CHECK(laguerre_oracle_coeff(Rat(2), 1, k).is_zero());

  CHECK_THROWS_AS(polya::laguerre_reduction(Rat(0), 1), polya::InvalidParamsError);
  CHECK_THROWS_AS(polya::laguerre_reduction(Rat(1), 2, 5), polya::InvalidParamsError);
}

TEST_CASE("laguerre polynomials are negative-real-rooted") {
  // roots of p(x) = e^{-x} 1F1(b+m;b;x) sit in (-inf, 0); equivalently the
  // flipped p(-y) has exactly m simple roots in (0, inf)
  for (const Rat& b : {Rat(1, 2), Rat(1), Rat(5, 2)}) {
    for (int m = 0; m <= 4; ++m) {
      const Poly1 p = polya::laguerre_reduction(b, m);
      std::vector<Rat> flipped(p.coeffs());
      for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
      const Poly1 q(std::move(flipped), "y");
      CHECK(polya::sturm_real_roots(q, Rat(0), std::nullopt) == m);
      CHECK(polya::sturm_real_roots(q) == m);  // all roots real, none negative
    }
  }
}

TEST_CASE("driver identity: 1F2(a-1/2; a, 2a-1) = [0F1(-;a;./4)]^2") {
  CHECK(polya::identity_driver_check(Rat(1), 30));
  CHECK(polya::identity_driver_check(Rat(3, 2), 30));
  // mismatch control: right side not squared
  const Rat a(1);
  const auto lhs = pfq_series(HyperParams{{a - Rat(1, 2)}, {a, Rat(2) * a - Rat(1)}}, 30);
  const auto half = scale_argument(pfq_series(HyperParams{{}, {a}}, 30), Rat(1, 4));
  CHECK(lhs != half);
  CHECK_THROWS_AS(polya::identity_driver_check(Rat(1, 2), 10), polya::InvalidParamsError);
  CHECK_THROWS_AS(polya::identity_driver_check(Rat(-1), 10), polya::InvalidParamsError);
}

TEST_CASE("bailey identity: 2F3 = product of two 0F1") {
  CHECK(polya::identity_bailey_check(Rat(1), Rat(2), 30));
  CHECK(polya::identity_bailey_check(Rat(3, 2), Rat(3, 2), 30));
  // mismatch control: perturb the last lower parameter to a+b
  const Rat a(1), b(2);
  const auto wrong = pfq_series(
      HyperParams{{(a + b) / Rat(2), (a + b - Rat(1)) / Rat(2)}, {a, b, a + b}}, 30);
  const auto fa = scale_argument(pfq_series(HyperParams{{}, {a}}, 30), Rat(1, 4));
  const auto fb = scale_argument(pfq_series(HyperParams{{}, {b}}, 30), Rat(1, 4));
  CHECK(wrong != fa * fb);
  CHECK_THROWS_AS(polya::identity_bailey_check(Rat(1, 2), Rat(1, 2), 10),
                  polya::InvalidParamsError);
}

TEST_CASE("property: identities hold for random rational parameters") {
  testutil::RatGen gen(71);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a = gen.positive(5);
    if (a == Rat(1, 2)) a = Rat(3, 4);
    CHECK(polya::identity_driver_check(a, 30));
    Rat ba = gen.positive(5), bb = gen.positive(5);
    if ((ba + bb) == Rat(1)) ba = ba + Rat(1);
    CHECK(polya::identity_bailey_check(ba, bb, 30));
  }
}

TEST_CASE("limit deviations shrink as b2 grows") {
  // order 0: both constant terms are 1
  CHECK(polya::limit_deviations(Rat(1), Rat(1), {Rat(10)}, 0)[0].is_zero());

  // exact expected deviation: coefficient n differs by h_n (1 - b2^n/(b2)_n)
  const Rat a(1), b1(1);
  const auto h = pfq_series(HyperParams{{a}, {b1}}, 5);
  const Rat b2(10);
  Rat expected(0);
  for (int n = 0; n <= 5; ++n) {
    const Rat factor = pow(b2, static_cast<unsigned long>(n)) / polya::pochhammer(b2, n);
    expected = std::max(expected, abs(h[n] * (Rat(1) - factor)));
  }
  const auto devs = polya::limit_deviations(a, b1, {b2}, 5);
  CHECK(devs[0] == expected);
  CHECK(devs[0] > Rat(0));

  const auto seq = polya::limit_deviations(a, b1, {Rat(10), Rat(100), Rat(1000)}, 5);
  CHECK(seq[0] > seq[1]);
  CHECK(seq[1] > seq[2]);
}
