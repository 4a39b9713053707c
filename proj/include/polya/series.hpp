#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <polya/errors.hpp>
#include <polya/rat.hpp>

namespace polya {

/// Truncated formal power series over an exact field K (Rat, or the
/// univariate rational-function field for the symbolic pipeline).
///
/// The truncation order is explicit state: a series of order N carries
/// exactly the coefficients of x^0..x^N and nothing is ever fabricated
/// beyond it; binary operations truncate to the smaller order. Values are
/// immutable after construction and all operations are pure functions.
template <class K>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(check_order(order) + 1) {}
  explicit PowerSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
  }

  static PowerSeries constant(const K& value, int order) {
    PowerSeries s(order);
    s.c_[0] = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const K& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<K>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const K& c) { return c.is_zero(); });
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return order;
  }

  std::vector<K> c_;
};

template <class K>
PowerSeries<K> operator+(const PowerSeries<K>& f, const PowerSeries<K>& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<K> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[i] + g[i];
  return PowerSeries<K>(std::move(c));
}

template <class K>
PowerSeries<K> operator-(const PowerSeries<K>& f, const PowerSeries<K>& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<K> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[i] - g[i];
  return PowerSeries<K>(std::move(c));
}

/// Cauchy product truncated to min(f.order, g.order). Plain O(N^2); N stays
/// small here and the exact coefficient arithmetic dominates anyway.
template <class K>
PowerSeries<K> operator*(const PowerSeries<K>& f, const PowerSeries<K>& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<K> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n && j <= g.order(); ++j)
      c[i + j] = c[i + j] + f[i] * g[j];
  return PowerSeries<K>(std::move(c));
}

template <class K>
PowerSeries<K> operator*(const K& a, const PowerSeries<K>& f) {
  std::vector<K> c(f.coeffs());
  for (K& x : c) x = a * x;
  return PowerSeries<K>(std::move(c));
}

template <class K>
PowerSeries<K> operator/(const PowerSeries<K>& f, const K& a) {
  std::vector<K> c(f.coeffs());
  for (K& x : c) x = x / a;
  return PowerSeries<K>(std::move(c));
}

/// Termwise derivative; the order drops by one, so order-0 input is rejected.
template <class K>
PowerSeries<K> derivative(const PowerSeries<K>& f) {
  if (f.order() < 1) throw std::invalid_argument("derivative of an order-0 series");
  std::vector<K> c(static_cast<std::size_t>(f.order()));
  for (int i = 1; i <= f.order(); ++i) c[i - 1] = K(static_cast<long>(i)) * f[i];
  return PowerSeries<K>(std::move(c));
}

/// g with f*g = 1 through the truncation order; requires f(0) != 0.
template <class K>
PowerSeries<K> reciprocal(const PowerSeries<K>& f) {
  if (f[0].is_zero()) throw ZeroConstantTermError{};
  const int n = f.order();
  std::vector<K> g(static_cast<std::size_t>(n) + 1);
  g[0] = K(1) / f[0];
  for (int m = 1; m <= n; ++m) {
    K acc{};
    for (int k = 1; k <= m; ++k) acc = acc + f[k] * g[m - k];
    g[m] = -(acc * g[0]);
  }
  return PowerSeries<K>(std::move(g));
}

/// f'/f, order f.order() - 1; requires f(0) != 0.
template <class K>
PowerSeries<K> log_derivative(const PowerSeries<K>& f) {
  if (f[0].is_zero()) throw ZeroConstantTermError{};
  return derivative(f) * reciprocal(f);
}

/// f(c*x): coefficient n picks up a factor c^n.
template <class K>
PowerSeries<K> scale_argument(const PowerSeries<K>& f, const K& c) {
  std::vector<K> out(static_cast<std::size_t>(f.order()) + 1);
  K p(1);
  for (int i = 0; i <= f.order(); ++i) {
    out[i] = f[i] * p;
    p = p * c;
  }
  return PowerSeries<K>(std::move(out));
}

/// Series of e^{c x}: coefficients c^n / n!.
inline PowerSeries<Rat> exp_series(const Rat& c, int order) {
  std::vector<Rat> out(static_cast<std::size_t>(order) + 1);
  out[0] = Rat(1);
  for (int n = 1; n <= order; ++n) out[n] = out[n - 1] * c / Rat(n);
  return PowerSeries<Rat>(std::move(out));
}

/// {"order": N, "coeffs": ["...", ...]} with Rat strings, constant term first.
inline std::string to_json(const PowerSeries<Rat>& f) {
  std::string out = "{\"order\":" + std::to_string(f.order()) + ",\"coeffs\":[";
  for (int i = 0; i <= f.order(); ++i) {
    if (i) out += ",";
    out += "\"" + f[i].str() + "\"";
  }
  return out + "]}";
}

}  // namespace polya
