#pragma once

#include <array>
#include <map>
#include <ostream>
#include <utility>

#include <polya/poly.hpp>
#include <polya/rat.hpp>

namespace polya {

/// Sparse polynomial in (gamma, b1, b2) over Rat. Exponent triples map to
/// nonzero coefficients; zero coefficients are never stored. Only the small
/// explicit forms live here (closed-form alpha_1/alpha_2 pieces, D_3), so
/// arithmetic is the naive sparse kind.
class Poly3 {
 public:
  enum Axis { kGamma = 0, kB1 = 1, kB2 = 2 };

  Poly3() = default;

  static Poly3 constant(const Rat& c) {
    Poly3 p;
    if (!c.is_zero()) p.t_[{0, 0, 0}] = c;
    return p;
  }
  static Poly3 variable(Axis axis) {
    Poly3 p;
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    p.t_[e] = Rat(1);
    return p;
  }

  bool is_zero() const { return t_.empty(); }

  friend Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }
  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend Poly3 operator*(const Rat& s, const Poly3& a) {
    Poly3 r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.t_) r.t_[e] = s * c;
    return r;
  }

  Rat eval(const Rat& gamma, const Rat& b1, const Rat& b2) const {
    Rat acc(0);
    for (const auto& [e, c] : t_)
      acc += c * pow(gamma, static_cast<unsigned long>(e[0])) *
             pow(b1, static_cast<unsigned long>(e[1])) *
             pow(b2, static_cast<unsigned long>(e[2]));
    return acc;
  }

  int degree_in_b2() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[2]);
    return d;
  }

  /// Coefficient of b2^k, as a polynomial in (gamma, b1).
  Poly3 coeff_in_b2(int k) const {
    Poly3 r;
    for (const auto& [e, c] : t_)
      if (e[2] == k) r.t_[{e[0], e[1], 0}] = c;
    return r;
  }

  Poly3 leading_coeff_in_b2() const { return coeff_in_b2(degree_in_b2()); }

  /// Partial evaluation at rational (gamma, b1), leaving a Poly1 in b2.
  Poly1 specialize(const Rat& gamma, const Rat& b1, const std::string& var = "b2") const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_in_b2(), 0)) + 1);
    for (const auto& [e, coef] : t_)
      c[static_cast<std::size_t>(e[2])] += coef * pow(gamma, static_cast<unsigned long>(e[0])) *
                                           pow(b1, static_cast<unsigned long>(e[1]));
    return Poly1(std::move(c), var);
  }

  friend bool operator==(const Poly3& a, const Poly3& b) { return a.t_ == b.t_; }

 private:
  void add_term(const std::array<int, 3>& e, const Rat& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!c.is_zero()) t_[e] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  std::map<std::array<int, 3>, Rat> t_;
};

}  // namespace polya
