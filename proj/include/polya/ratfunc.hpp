#pragma once

#include <ostream>
#include <string>
#include <utility>

#include <polya/errors.hpp>
#include <polya/poly.hpp>
#include <polya/rat.hpp>

namespace polya {

/// Reduced univariate rational function over Rat (variable "b2" by default).
/// Canonical form after every operation: gcd(num, den) = 1 and den monic,
/// which makes equality coefficientwise. Zero is 0/1.
class RatFunc1 {
 public:
  RatFunc1() : num_("b2"), den_(Poly1::constant(Rat(1), "b2")) {}
  RatFunc1(long n) : RatFunc1(Rat(n)) {}  // NOLINT: implicit scalar embedding
  RatFunc1(const Rat& c)                  // NOLINT
      : num_(Poly1::constant(c, "b2")), den_(Poly1::constant(Rat(1), "b2")) {}
  explicit RatFunc1(Poly1 num) : num_(std::move(num)), den_(Poly1::constant(Rat(1), num_.var())) {}
  RatFunc1(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }

  static RatFunc1 variable(std::string var = "b2") {
    return RatFunc1(Poly1::variable(std::move(var)));
  }

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rat eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
  }

  friend RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b) {
    return RatFunc1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b) {
    return RatFunc1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b) {
    return RatFunc1(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc1(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc1 operator-() const {
    RatFunc1 r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RatFunc1& a, const RatFunc1& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc1& f) {
    os << "(" << f.num_ << ")";
    if (!f.is_polynomial()) os << " / (" << f.den_ << ")";
    return os;
  }

  friend std::string to_json(const RatFunc1& f) {
    return "{\"var\":\"" + f.num_.var() + "\",\"num\":" + to_json(f.num_) +
           ",\"den\":" + to_json(f.den_) + "}";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly1::constant(Rat(1), den_.var());
      return;
    }
    const Poly1 g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rat lead = den_.leading_coeff();
    if (!(lead == Rat(1))) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  Poly1 num_, den_;
};

}  // namespace polya
