#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <polya/errors.hpp>
#include <polya/poly.hpp>
#include <polya/rat.hpp>
#include <polya/series.hpp>

namespace polya {

/// Rising factorial a(a+1)...(a+n-1); the empty product for n = 0.
inline Rat pochhammer(const Rat& a, int n) {
  if (n < 0) throw InvalidParamsError("pochhammer needs n >= 0");
  Rat r(1);
  for (int i = 0; i < n; ++i) r *= a + Rat(i);
  return r;
}

/// Validated parameter tuple (a_1..a_p; b_1..b_q) for pFq. The entire-function
/// regime p <= q is required, no lower parameter may be a nonpositive integer,
/// and upper parameters may be nonpositive integers (polynomial case) only
/// when polynomial_mode is set explicitly.
struct HyperParams {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  bool polynomial_mode = false;

  void validate() const {
    if (upper.size() > lower.size())
      throw InvalidParamsError("pFq needs p <= q (entire-function regime)");
    for (const Rat& b : lower)
      if (b.is_nonpositive_integer())
        throw InvalidParamsError("lower parameter " + b.str() + " is a nonpositive integer");
    if (!polynomial_mode)
      for (const Rat& a : upper)
        if (a.is_nonpositive_integer())
          throw InvalidParamsError("upper parameter " + a.str() +
                                   " is a nonpositive integer (series would be a polynomial)");
  }

  /// Parses "a1,a2;b1,b2,b3" with Rat syntax on each entry, e.g. "3/2;1,2".
  /// An empty upper part ("";...) gives p = 0.
  static HyperParams parse(std::string_view s) {
    const auto semi = s.find(';');
    if (semi == std::string_view::npos || s.find(';', semi + 1) != std::string_view::npos)
      throw InvalidParamsError("parameter string needs exactly one ';': '" + std::string(s) + "'");
    auto split = [](std::string_view part) {
      std::vector<Rat> out;
      if (part.empty()) return out;
      std::size_t start = 0;
      while (true) {
        const auto comma = part.find(',', start);
        const auto piece = part.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(Rat::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return out;
    };
    HyperParams p{split(s.substr(0, semi)), split(s.substr(semi + 1))};
    p.validate();
    return p;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? "," : "") << upper[i];
    os << ";";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? "," : "") << lower[i];
    return os.str();
  }
};

/// Series kernel over any exact field K: coefficient n+1 follows from n by
/// the ratio prod(a_i + n) / (prod(b_j + n) * (n+1)). Callers are responsible
/// for parameter validity (the Rat front end validates, the rational-function
/// pipeline cannot hit a zero divisor).
template <class K>
PowerSeries<K> pfq_series_kernel(const std::vector<K>& upper, const std::vector<K>& lower,
                                 int order) {
  std::vector<K> c(static_cast<std::size_t>(order) + 1);
  c[0] = K(1);
  for (int n = 0; n < order; ++n) {
    K num(1), den(static_cast<long>(n + 1));
    for (const K& a : upper) num = num * (a + K(static_cast<long>(n)));
    for (const K& b : lower) den = den * (b + K(static_cast<long>(n)));
    c[static_cast<std::size_t>(n + 1)] = c[static_cast<std::size_t>(n)] * num / den;
  }
  return PowerSeries<K>(std::move(c));
}

/// Exact coefficients of pFq(a; b; x) through x^order.
inline PowerSeries<Rat> pfq_series(const HyperParams& params, int order) {
  params.validate();
  return pfq_series_kernel<Rat>(params.upper, params.lower, order);
}

/// s_n = (-1)^n [x^n] f'/f for f = pFq(params), n = 0..depth.
/// s_0 = prod(a) / prod(b).
inline std::vector<Rat> signed_logderiv_moments(const HyperParams& params, int depth) {
  if (depth < 0) throw InvalidParamsError("moment depth must be >= 0");
  const auto ld = log_derivative(pfq_series(params, depth + 1));
  std::vector<Rat> s(static_cast<std::size_t>(depth) + 1);
  for (int n = 0; n <= depth; ++n) s[n] = n % 2 == 0 ? ld[n] : -ld[n];
  return s;
}

/// e^{-x} * 1F1(b+m; b; x) is a polynomial of degree m. Computes the product
/// series out to `guard` (default m+10), insists the tail beyond degree m is
/// exactly zero, and returns the polynomial. A nonzero tail coefficient can
/// only be an arithmetic bug, hence ReductionFailureError.
inline Poly1 laguerre_reduction(const Rat& b, int m, int guard = -1) {
  if (guard < 0) guard = m + 10;
  if (!(b > Rat(0))) throw InvalidParamsError("laguerre_reduction needs b > 0");
  if (m < 0) throw InvalidParamsError("laguerre_reduction needs m >= 0");
  if (guard < m + 5) throw InvalidParamsError("laguerre_reduction guard must be >= m+5");
  const auto f = pfq_series_kernel<Rat>({b + Rat(m)}, {b}, guard);
  const auto prod = f * exp_series(Rat(-1), guard);
  for (int k = m + 1; k <= guard; ++k)
    if (!prod[k].is_zero())
      throw ReductionFailureError("e^{-x} 1F1(b+m;b;x) has nonzero coefficient at x^" +
                                  std::to_string(k));
  std::vector<Rat> c(prod.coeffs().begin(), prod.coeffs().begin() + m + 1);
  Poly1 poly(std::move(c), "x");
  if (poly.degree() != m)
    throw ReductionFailureError("reduced polynomial degree " + std::to_string(poly.degree()) +
                                ", expected " + std::to_string(m));
  return poly;
}

/// 1F2(a-1/2; a, 2a-1; x) == [0F1(-; a; x/4)]^2 through x^order.
inline bool identity_driver_check(const Rat& a, int order) {
  if (!(a > Rat(0)) || a == Rat(1, 2))
    throw InvalidParamsError("driver identity needs a > 0, a != 1/2");
  HyperParams lhs_params{{a - Rat(1, 2)}, {a, Rat(2) * a - Rat(1)}};
  const auto lhs = pfq_series(lhs_params, order);
  const auto half = scale_argument(pfq_series(HyperParams{{}, {a}}, order), Rat(1, 4));
  return lhs == half * half;
}

/// 2F3((a+b)/2, (a+b-1)/2; a, b, a+b-1; x) == 0F1(-;a;x/4) * 0F1(-;b;x/4).
inline bool identity_bailey_check(const Rat& a, const Rat& b, int order) {
  if (!(a > Rat(0)) || !(b > Rat(0)))
    throw InvalidParamsError("bailey identity needs a, b > 0");
  const Rat ab1 = a + b - Rat(1);
  if (ab1.is_nonpositive_integer())
    throw InvalidParamsError("bailey identity needs a+b-1 outside -N u {0}");
  HyperParams lhs_params{{(a + b) / Rat(2), ab1 / Rat(2)}, {a, b, ab1}};
  const auto lhs = pfq_series(lhs_params, order);
  const auto fa = scale_argument(pfq_series(HyperParams{{}, {a}}, order), Rat(1, 4));
  const auto fb = scale_argument(pfq_series(HyperParams{{}, {b}}, order), Rat(1, 4));
  return lhs == fa * fb;
}

/// Max coefficient deviation |[x^n] 1F2(a;b1,b2; b2*x) - [x^n] 1F1(a;b1;x)|
/// over n <= order, for each b2. The deviations shrink to zero as b2 grows
/// (1F1 is the large-b2 limit of the rescaled 1F2); callers assert the
/// monotone decrease.
inline std::vector<Rat> limit_deviations(const Rat& a, const Rat& b1,
                                         const std::vector<Rat>& b2_values, int order) {
  if (!(a > Rat(0)) || !(b1 > Rat(0)))
    throw InvalidParamsError("limit check needs positive parameters");
  const auto target = pfq_series(HyperParams{{a}, {b1}}, order);
  std::vector<Rat> out;
  out.reserve(b2_values.size());
  for (const Rat& b2 : b2_values) {
    if (!(b2 > Rat(0))) throw InvalidParamsError("limit check needs positive b2");
    const auto scaled = scale_argument(pfq_series(HyperParams{{a}, {b1, b2}}, order), b2);
    Rat dev(0);
    for (int n = 0; n <= order; ++n) dev = std::max(dev, abs(scaled[n] - target[n]));
    out.push_back(dev);
  }
  return out;
}

}  // namespace polya
