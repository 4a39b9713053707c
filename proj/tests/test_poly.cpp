#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polya/poly.hpp>
#include <polya/poly3.hpp>
#include <polya/ratfunc.hpp>

#include "test_util.hpp"

using polya::Poly1;
using polya::Poly3;
using polya::Rat;
using polya::RatFunc1;

namespace {

Poly1 poly(std::vector<long> coeffs, std::string var = "b2") {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long n : coeffs) c.emplace_back(n);
  return Poly1(std::move(c), std::move(var));
}

Poly1 from_roots(const std::vector<Rat>& roots, const std::string& var = "b2") {
  Poly1 p = Poly1::constant(Rat(1), var);
  for (const Rat& r : roots)
    p = p * Poly1(std::vector<Rat>{-r, Rat(1)}, var);
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation") {
  CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));  // (b2+1)(b2-1)
  CHECK(poly({1, 2, 3}).eval(Rat(2)) == Rat(17));
  CHECK(poly({0}).is_zero());
  CHECK(poly({}).degree() == -1);
  CHECK(poly({0, 0, 5}).leading_coeff() == Rat(5));
  CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
  CHECK_THROWS_AS(poly({1, 1}, "x") + poly({1, 1}, "y"), polya::VariableMismatchError);
  // constants are variable-agnostic
  CHECK(Poly1::constant(Rat(2), "x") * poly({1, 1}, "y") == poly({2, 2}, "y"));
}

TEST_CASE("divmod") {
  const auto [q, r] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  const auto [q2, r2] = divmod(poly({1, 0, 0, 2}), poly({1, 1}));
  CHECK(q2 * poly({1, 1}) + r2 == poly({1, 0, 0, 2}));
  CHECK(r2.degree() < 1);
  CHECK_THROWS_AS(divmod(poly({1}), Poly1("b2")), std::domain_error);
}

TEST_CASE("gcd examples") {
  CHECK(polya::poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(polya::poly_gcd(poly({2, 4}), Poly1("b2")) == poly({1, 2}).monic());
  CHECK(polya::poly_gcd(Poly1("b2"), poly({2, 4})) == poly({1, 2}).monic());

  // coprime cubics built from disjoint rational root sets
  testutil::RatGen gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> roots;
    while (roots.size() < 6) {
      Rat r = gen.any(9, 7);
      bool fresh = true;
      for (const Rat& s : roots) fresh = fresh && !(s == r);
      if (fresh) roots.push_back(r);
    }
    const Poly1 a = from_roots({roots[0], roots[1], roots[2]});
    const Poly1 b = from_roots({roots[3], roots[4], roots[5]});
    CHECK(polya::poly_gcd(a, b) == Poly1::constant(Rat(1), "b2"));
    // and a forced common factor comes back out, monic
    const Poly1 common = from_roots({roots[0], roots[3]});
    CHECK(polya::poly_gcd(a * common, b * common) == common.monic());
  }
}

TEST_CASE("sturm root counting") {
  CHECK(polya::sturm_real_roots(poly({-1, 0, 1})) == 2);
  CHECK(polya::sturm_real_roots(poly({1, 0, 1})) == 0);
  // roots 1, 2, 3; (3/2, inf) holds two of them
  const Poly1 p = from_roots({Rat(1), Rat(2), Rat(3)});
  CHECK(polya::sturm_real_roots(p, Rat(3, 2), std::nullopt) == 2);
  // (lo, hi] includes the right endpoint, excludes the left
  CHECK(polya::sturm_real_roots(p, Rat(1), Rat(3)) == 2);
  CHECK(polya::sturm_real_roots(p, Rat(0), Rat(3)) == 3);
  CHECK(polya::sturm_real_roots(p, Rat(0), Rat(5, 2)) == 2);
  CHECK(polya::sturm_real_roots(Poly1::constant(Rat(4), "b2")) == 0);
  CHECK_THROWS_AS(polya::sturm_real_roots(Poly1("b2")), std::invalid_argument);
}

TEST_CASE("property: sturm count matches constructed linear factors") {
  testutil::RatGen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> roots;
    const int want = 1 + static_cast<int>(gen.integer(0, 4));
    while (static_cast<int>(roots.size()) < want) {
      Rat r = gen.any(8, 5);
      bool fresh = true;
      for (const Rat& s : roots) fresh = fresh && !(s == r);
      if (fresh) roots.push_back(r);
    }
    CHECK(polya::sturm_real_roots(from_roots(roots)) == want);
    // squarefree part handles a repeated factor without double counting
    CHECK(polya::sturm_real_roots(from_roots(roots) * from_roots({roots[0]})) == want);
  }
}

TEST_CASE("rational functions reduce to canonical form") {
  // (b2^2 - 1)/(b2 - 1) = b2 + 1
  const RatFunc1 f(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(f.is_polynomial());
  CHECK(f.num() == poly({1, 1}));
  // denominator comes out monic
  const RatFunc1 g(poly({1}), poly({2, 4}));
  CHECK(g.den() == poly({1, 2}).monic());
  CHECK(g.num() == Poly1::constant(Rat(1, 4), "b2"));
  CHECK((f - f).is_zero());
  CHECK(RatFunc1(Rat(3, 2)).eval(Rat(99)) == Rat(3, 2));
  CHECK_THROWS_AS(RatFunc1(poly({1}), Poly1("b2")), std::domain_error);
  CHECK_THROWS_AS(f / RatFunc1(0), std::domain_error);
  // pole evaluation is refused
  const RatFunc1 h(poly({1}), poly({-1, 1}));
  CHECK_THROWS_AS(h.eval(Rat(1)), std::domain_error);
  CHECK(h.eval(Rat(3)) == Rat(1, 2));
}

TEST_CASE("property: rational function field laws") {
  testutil::RatGen gen(23);
  auto random_rf = [&] {
    std::vector<Rat> n, d;
    for (int i = 0; i < 3; ++i) n.push_back(gen.any());
    d.push_back(gen.positive());
    for (int i = 0; i < 2; ++i) d.push_back(gen.any());
    return RatFunc1(Poly1(std::move(n), "b2"), Poly1(std::move(d), "b2"));
  };
  for (int trial = 0; trial < 15; ++trial) {
    const RatFunc1 a = random_rf(), b = random_rf(), c = random_rf();
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
    // canonical invariants: gcd(num, den) = 1, den monic
    const RatFunc1 s = a * b + c;
    if (!s.is_zero()) {
      CHECK(polya::poly_gcd(s.num(), s.den()).degree() == 0);
      CHECK(s.den().leading_coeff() == Rat(1));
    }
  }
}

TEST_CASE("json serialization") {
  CHECK(polya::to_json(poly({1, 0, -2}, "x")) ==
        "{\"var\":\"x\",\"coeffs\":[\"1\",\"0\",\"-2\"]}");
  const RatFunc1 f(poly({1}), poly({2, 4}));
  CHECK(to_json(f) ==
        "{\"var\":\"b2\",\"num\":{\"var\":\"b2\",\"coeffs\":[\"1/4\"]},"
        "\"den\":{\"var\":\"b2\",\"coeffs\":[\"1/2\",\"1\"]}}");
}

TEST_CASE("trivariate polynomials") {
  const Poly3 b2 = Poly3::variable(Poly3::kB2);
  const Poly3 one = Poly3::constant(Rat(1));
  CHECK((b2 + one) * (b2 - one) == b2 * b2 - one);
  const Poly3 gamma = Poly3::variable(Poly3::kGamma);
  // gamma^2(gamma-1) b2^4 + gamma b2: leading coefficient in b2
  const Poly3 lead = gamma * gamma * (gamma - one);
  const Poly3 p = lead * b2 * b2 * b2 * b2 + gamma * b2;
  CHECK(p.degree_in_b2() == 4);
  CHECK(p.leading_coeff_in_b2() == lead);
  CHECK(p.eval(Rat(2), Rat(0), Rat(1)) == Rat(4) * Rat(1) + Rat(2));
  // partial evaluation agrees with full evaluation
  const Poly1 sp = p.specialize(Rat(1, 2), Rat(3));
  CHECK(sp.eval(Rat(7)) == p.eval(Rat(1, 2), Rat(3), Rat(7)));
}
