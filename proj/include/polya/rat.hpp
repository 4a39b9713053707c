#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <polya/errors.hpp>

namespace polya {

/// Arbitrary-precision exact rational, the scalar for everything here.
/// Canonical form (gcd(|num|, den) = 1, den > 0) holds after every public
/// operation; GMP maintains it through arithmetic once established.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, Rat(3) reads naturally
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw InvalidParamsError("rational with zero denominator");
    v_.canonicalize();
  }
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw InvalidParamsError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Accepts "p", "p/q" and exact decimal strings ("-5/4", "52.4865").
  static Rat parse(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// "p/q" with optional sign; integers render without the "/q" part.
  std::string str() const { return v_.get_str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return raw(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return raw(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  friend Rat abs(const Rat& a) { return raw(mpq_class(abs(a.v_))); }

  /// a^e for e >= 0.
  friend Rat pow(const Rat& a, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), a.v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.v_.get_den_mpz_t(), e);
    return raw(std::move(r));  // powers of a canonical value stay canonical
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

 private:
  struct raw_tag {};
  Rat(mpq_class q, raw_tag) : v_(std::move(q)) {}
  static Rat raw(mpq_class q) { return Rat(std::move(q), raw_tag{}); }

  mpq_class v_;
};

inline Rat Rat::parse(std::string_view s) {
  auto fail = [&] { throw InvalidParamsError("cannot parse rational: '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  std::string_view body = s;
  bool neg = false;
  if (body.front() == '+' || body.front() == '-') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail();
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  mpz_class num, den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail();
    num = mpz_class(std::string(p));
    den = mpz_class(std::string(q));
    if (den == 0) fail();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!all_digits(ip) && !ip.empty()) fail();
    if (!all_digits(fp)) fail();
    num = mpz_class(std::string(ip.empty() ? "0" : std::string(ip)) + std::string(fp));
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  } else {
    if (!all_digits(body)) fail();
    num = mpz_class(std::string(body));
  }
  if (neg) num = -num;
  return Rat(num, den);
}

}  // namespace polya
