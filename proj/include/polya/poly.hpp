#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <polya/errors.hpp>
#include <polya/rat.hpp>

namespace polya {

/// Dense univariate polynomial over Rat with a variable tag. The zero
/// polynomial has an empty coefficient vector and degree -1 by convention;
/// otherwise the leading coefficient is nonzero. Binary operations require
/// matching variable tags; constants (degree <= 0) match any tag.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::string var) : var_(std::move(var)) {}
  explicit Poly1(std::vector<Rat> coeffs, std::string var = "x")
      : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static Poly1 constant(const Rat& value, std::string var = "x") {
    return Poly1(std::vector<Rat>{value}, std::move(var));
  }
  static Poly1 variable(std::string var = "x") {
    return Poly1(std::vector<Rat>{Rat(0), Rat(1)}, std::move(var));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  const std::string& var() const { return var_; }

  Rat coeff(int i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
  }
  Rat leading_coeff() const { return is_zero() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    const std::string& v = merged_var(a, b);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly1(std::move(c), v);
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }
  Poly1 operator-() const {
    std::vector<Rat> c(c_);
    for (Rat& x : c) x = -x;
    return Poly1(std::move(c), var_);
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    const std::string& v = merged_var(a, b);
    if (a.is_zero() || b.is_zero()) return Poly1(v);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(c), v);
  }
  friend Poly1 operator*(const Rat& s, const Poly1& a) {
    if (s.is_zero()) return Poly1(a.var_);
    std::vector<Rat> c(a.c_);
    for (Rat& x : c) x = s * x;
    return Poly1(std::move(c), a.var_);
  }
  friend Poly1 operator/(const Poly1& a, const Rat& s) { return (Rat(1) / s) * a; }

  Poly1 derivative() const {
    if (degree() < 1) return Poly1(var_);
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly1(std::move(c), var_);
  }

  Poly1 monic() const {
    if (is_zero()) return *this;
    return *this / leading_coeff();
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::string& v = merged_var(a, b);
    std::vector<Rat> rem(a.c_);
    std::vector<Rat> quo;
    const int db = b.degree();
    int dr = a.degree();
    if (dr >= db) quo.assign(static_cast<std::size_t>(dr - db) + 1, Rat(0));
    const Rat lb = b.leading_coeff();
    while (dr >= db) {
      if (rem[static_cast<std::size_t>(dr)].is_zero()) {
        --dr;
        continue;
      }
      const Rat q = rem[static_cast<std::size_t>(dr)] / lb;
      quo[static_cast<std::size_t>(dr - db)] = q;
      for (int i = 0; i <= db; ++i)
        rem[static_cast<std::size_t>(dr - db + i)] -= q * b.coeff(i);
      --dr;
    }
    return {Poly1(std::move(quo), v), Poly1(std::move(rem), v)};
  }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly1& p) {
    if (p.is_zero()) return os << "0";
    for (int i = p.degree(); i >= 0; --i) {
      const Rat c = p.coeff(i);
      if (c.is_zero()) continue;
      if (i != p.degree()) os << (c.sign() > 0 ? " + " : " - ");
      else if (c.sign() < 0) os << "-";
      const Rat a = abs(c);
      if (i == 0 || !(a == Rat(1))) os << a.str();
      if (i > 0) {
        os << p.var();
        if (i > 1) os << "^" << i;
      }
    }
    return os;
  }

 private:
  static const std::string& merged_var(const Poly1& a, const Poly1& b) {
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
      throw VariableMismatchError("polynomial variables differ: " + a.var_ + " vs " + b.var_);
    return a.is_constant() ? b.var_ : a.var_;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
  std::string var_ = "x";
};

namespace detail {

// Integer image of a rational polynomial: primitive, leading sign preserved.
inline std::vector<mpz_class> primitive_int_coeffs(const Poly1& p) {
  mpz_class lcm_den(1);
  for (const Rat& c : p.coeffs())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) z.push_back(c.numerator() * (lcm_den / c.denominator()));
  mpz_class content(0);
  for (const mpz_class& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 0)
    for (mpz_class& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return z;
}

inline int int_deg(const std::vector<mpz_class>& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

// Pseudo-remainder lc(b)^{deg a - deg b + 1} * (a mod b). The multiplier
// exponent is always the full deg a - deg b + 1 (padded after the reduction
// loop), so callers can reason about its sign.
inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const int db = int_deg(b);
  const mpz_class& lb = b[static_cast<std::size_t>(db)];
  int da = int_deg(a);
  int e = da - db + 1;
  while (da >= db) {
    const mpz_class top = a[static_cast<std::size_t>(da)];
    for (int i = 0; i < da; ++i) a[static_cast<std::size_t>(i)] *= lb;
    a[static_cast<std::size_t>(da)] = 0;
    for (int i = 0; i < db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= top * b[static_cast<std::size_t>(i)];
    --e;
    da = int_deg(a);
  }
  if (e > 0) {
    mpz_class lbe;
    mpz_pow_ui(lbe.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (mpz_class& c : a) c *= lbe;
  }
  a.resize(da < 0 ? 0 : static_cast<std::size_t>(da) + 1);
  return a;
}

inline void make_primitive(std::vector<mpz_class>& p) {
  mpz_class content(0);
  for (const mpz_class& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 0)
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

}  // namespace detail

/// Monic gcd over Q, computed on the integer primitive parts with a
/// fraction-free remainder sequence (every remainder renormalized to
/// primitive form, which keeps coefficient growth linear).
/// gcd(p, 0) = monic(p) by convention.
inline Poly1 poly_gcd(const Poly1& p, const Poly1& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (!p.is_constant() && !q.is_constant() && p.var() != q.var())
    throw VariableMismatchError("gcd of polynomials in different variables");
  const std::string var = p.is_constant() ? q.var() : p.var();

  std::vector<mpz_class> a = detail::primitive_int_coeffs(p);
  std::vector<mpz_class> b = detail::primitive_int_coeffs(q);
  if (detail::int_deg(a) < detail::int_deg(b)) std::swap(a, b);
  while (detail::int_deg(b) >= 1) {
    std::vector<mpz_class> r = detail::pseudo_rem(a, b);
    detail::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (detail::int_deg(b) == 0) return Poly1::constant(Rat(1), var);
  std::vector<Rat> c;
  c.reserve(a.size());
  for (const mpz_class& z : a) c.emplace_back(z, mpz_class(1));
  return Poly1(std::move(c), var).monic();
}

/// {"var": "...", "coeffs": ["...", ...]} with Rat strings, lowest degree first.
inline std::string to_json(const Poly1& p) {
  std::string out = "{\"var\":\"" + p.var() + "\",\"coeffs\":[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ",";
    out += "\"" + p.coeff(i).str() + "\"";
  }
  return out + "]}";
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline Poly1 squarefree_part(const Poly1& p) {
  if (p.degree() < 1) return p;
  const Poly1 g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return p;
  return divmod(p, g).first;
}

namespace detail {

// Sturm chain as primitive integer polynomials. Each step stores the negated
// remainder up to a positive factor: pseudo_rem scales by lc(b)^{d+1}, whose
// sign is compensated before the flip so the variation count is untouched.
inline std::vector<std::vector<mpz_class>> sturm_chain(const Poly1& p) {
  std::vector<std::vector<mpz_class>> chain;
  chain.push_back(primitive_int_coeffs(p));
  if (int_deg(chain[0]) < 1) return chain;
  {
    std::vector<mpz_class> d(chain[0].size() - 1);
    for (std::size_t i = 1; i < chain[0].size(); ++i)
      d[i - 1] = mpz_class(static_cast<long>(i)) * chain[0][i];
    make_primitive(d);
    chain.push_back(std::move(d));
  }
  while (int_deg(chain.back()) >= 1) {
    const std::vector<mpz_class>& a = chain[chain.size() - 2];
    const std::vector<mpz_class>& b = chain.back();
    const int d = int_deg(a) - int_deg(b);
    const mpz_class& lb = b[static_cast<std::size_t>(int_deg(b))];
    std::vector<mpz_class> r = pseudo_rem(a, b);
    if (int_deg(r) < 0) break;
    const bool multiplier_negative = sgn(lb) < 0 && (d + 1) % 2 == 1;
    if (!multiplier_negative)
      for (mpz_class& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_at(const std::vector<mpz_class>& p, const Rat& x) {
  // sign of p(u/v) via the integer value v^deg * p(u/v)
  const int deg = int_deg(p);
  if (deg < 0) return 0;
  const mpz_class u = x.numerator(), v = x.denominator();
  mpz_class acc(0), vpow(1);
  for (int i = deg; i >= 0; --i) {
    acc = acc * u + p[static_cast<std::size_t>(i)] * vpow;
    vpow *= v;
  }
  return sgn(acc);
}

inline int sign_at_infinity(const std::vector<mpz_class>& p, bool positive) {
  const int deg = int_deg(p);
  if (deg < 0) return 0;
  int s = sgn(p[static_cast<std::size_t>(deg)]);
  if (!positive && deg % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace detail

/// Exact count of distinct real roots of p in (lo, hi]; nullopt endpoints
/// mean -inf / +inf. The squarefree part is taken internally, so inputs with
/// repeated roots still count distinct roots (the documented contract asks
/// callers to pass squarefree polynomials).
inline int sturm_real_roots(const Poly1& p, std::optional<Rat> lo = std::nullopt,
                            std::optional<Rat> hi = std::nullopt) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const Poly1 sf = squarefree_part(p);
  const auto chain = detail::sturm_chain(sf);
  auto variations_at = [&](const std::optional<Rat>& x, bool positive_inf) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain)
      s.push_back(x ? detail::sign_at(q, *x) : detail::sign_at_infinity(q, positive_inf));
    return detail::variations(s);
  };
  return variations_at(lo, false) - variations_at(hi, true);
}

}  // namespace polya
