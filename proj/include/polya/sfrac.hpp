#pragma once

#include <gmpxx.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <polya/errors.hpp>
#include <polya/hyper.hpp>
#include <polya/rat.hpp>
#include <polya/series.hpp>

namespace polya {

enum class SStatus {
  Complete,    // alpha_1..alpha_depth all extracted, all nonzero
  Terminated,  // alpha_k = 0 with identically-zero remainder: finite fraction
  Degenerate,  // alpha_k = 0 with nonzero remainder: test inconclusive here
};

/// Result of expanding a moment sequence into the S-fraction
///
///   sum s_n t^n = alpha_0 / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))
///
/// alphas holds alpha_0..alpha_d for Complete, alpha_0..alpha_k (ending in
/// the zero pivot) otherwise. stop_index is k for Terminated/Degenerate
/// and -1 for Complete.
template <class K>
struct SFractionReport {
  std::vector<K> alphas;
  int depth_requested = 0;
  SStatus status = SStatus::Complete;
  int stop_index = -1;
};

/// Successive-division expansion. Level k inverts the running tail series
/// R (constant term 1), strips the constant, and divides by t:
/// T = (1 - 1/R)/t, alpha_k = T(0), next R = T/alpha_k. One truncation order
/// is consumed per level, so depth coefficients need depth+1 moments.
template <class K>
SFractionReport<K> sfraction_expand(const std::vector<K>& moments, int depth) {
  if (depth < 0) throw std::invalid_argument("expansion depth must be >= 0");
  if (moments.size() < static_cast<std::size_t>(depth) + 1)
    throw std::invalid_argument("need depth+1 moments");
  if (moments[0].is_zero()) throw ZeroLeadingMomentError{};

  SFractionReport<K> report;
  report.depth_requested = depth;
  report.alphas.push_back(moments[0]);

  std::vector<K> norm(moments.begin(), moments.begin() + depth + 1);
  for (K& m : norm) m = m / moments[0];
  PowerSeries<K> run(std::move(norm));

  for (int k = 1; k <= depth; ++k) {
    const PowerSeries<K> inv = reciprocal(run);
    std::vector<K> t(static_cast<std::size_t>(inv.order()));
    for (int j = 1; j <= inv.order(); ++j) t[j - 1] = -inv[j];
    PowerSeries<K> tail(std::move(t));

    const K pivot = tail[0];
    if (pivot.is_zero()) {
      report.alphas.push_back(pivot);
      report.stop_index = k;
      report.status = tail.is_zero() ? SStatus::Terminated : SStatus::Degenerate;
      return report;
    }
    report.alphas.push_back(pivot);
    run = tail / pivot;
  }
  return report;
}

/// Re-expands the (finite) fraction bottom-up: tail_i = 1/(1 - alpha_i t tail_{i+1}).
template <class K>
std::vector<K> sfraction_to_series(const SFractionReport<K>& report, int order) {
  PowerSeries<K> tail = PowerSeries<K>::constant(K(1), order);
  for (std::size_t i = report.alphas.size() - 1; i >= 1; --i) {
    std::vector<K> u(static_cast<std::size_t>(order) + 1);
    u[0] = K(1);
    for (int j = 1; j <= order; ++j) u[j] = -(report.alphas[i] * tail[j - 1]);
    tail = reciprocal(PowerSeries<K>(std::move(u)));
  }
  std::vector<K> out(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) out[j] = report.alphas[0] * tail[j];
  return out;
}

/// LP+ / Stieltjes verdict at finite depth.
///
/// FirstNegativeAlpha is one-sided certainty: a strictly negative alpha_k
/// preceded by strictly positive ones certifies the sequence is NOT a
/// Stieltjes moment sequence (and the function behind it is not in LP+).
/// StieltjesUpTo(d) is depth-bounded evidence only, never a proof, since
/// membership needs every alpha. Degenerate(k) means a zero pivot with
/// nonzero remainder blocked the test at this parameter point.
struct Verdict {
  enum class Kind { StieltjesUpTo, FirstNegativeAlpha, Degenerate };
  Kind kind = Kind::StieltjesUpTo;
  int depth = 0;
  int k = -1;      // index of the offending alpha, if any
  Rat alpha;       // its value (FirstNegativeAlpha only)
  Rat s0 = Rat(1); // pre-normalization leading moment
};

inline const char* verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::StieltjesUpTo: return "stieltjes_up_to";
    case Verdict::Kind::FirstNegativeAlpha: return "first_negative_alpha";
    case Verdict::Kind::Degenerate: return "degenerate";
  }
  return "?";
}

inline std::string to_json(const Verdict& v) {
  std::ostringstream os;
  os << "{\"kind\":\"" << verdict_kind_name(v.kind) << "\",\"depth\":" << v.depth;
  if (v.kind == Verdict::Kind::FirstNegativeAlpha)
    os << ",\"k\":" << v.k << ",\"alpha\":\"" << v.alpha.str() << "\"";
  else if (v.kind == Verdict::Kind::Degenerate)
    os << ",\"k\":" << v.k;
  os << ",\"s0\":\"" << v.s0.str() << "\"}";
  return os.str();
}

namespace detail {

inline Verdict verdict_from_report(const SFractionReport<Rat>& report, const Rat& s0) {
  Verdict v;
  v.depth = report.depth_requested;
  v.s0 = s0;
  const int last = static_cast<int>(report.alphas.size()) - 1;
  for (int k = 1; k <= last; ++k) {
    const Rat& a = report.alphas[static_cast<std::size_t>(k)];
    if (a.sign() < 0) {
      v.kind = Verdict::Kind::FirstNegativeAlpha;
      v.k = k;
      v.alpha = a;
      return v;
    }
    if (a.is_zero()) {
      // the expansion stopped here; Terminated is a legitimate finite fraction
      if (report.status == SStatus::Degenerate) {
        v.kind = Verdict::Kind::Degenerate;
        v.k = k;
      }
      return v;
    }
  }
  return v;
}

}  // namespace detail

/// Applies the continued-fraction criterion to raw moments.
inline Verdict stieltjes_verdict(const std::vector<Rat>& moments, int depth) {
  if (moments.empty() || moments[0].is_zero()) throw ZeroLeadingMomentError{};
  if (moments[0].sign() < 0)
    throw InvalidParamsError("stieltjes_verdict needs moments[0] > 0");
  const auto report = sfraction_expand<Rat>(moments, depth);
  return detail::verdict_from_report(report, moments[0]);
}

/// Leading principal minors of the Hankel matrices [s_{i+j}] and [s_{i+j+1}],
/// every size fully determined by moments[0..depth]. Simultaneous positivity
/// of both families is the classical cross-check for the S-fraction signs.
/// Computed by fraction-free (Bareiss) elimination after clearing
/// denominators, then rescaled back exactly.
inline std::pair<std::vector<Rat>, std::vector<Rat>> hankel_determinants(
    const std::vector<Rat>& moments, int depth) {
  if (moments.size() < static_cast<std::size_t>(depth) + 1)
    throw std::invalid_argument("need depth+1 moments");

  mpz_class lcm_den(1);
  for (int i = 0; i <= depth; ++i)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), moments[i].denominator().get_mpz_t());
  std::vector<mpz_class> z(static_cast<std::size_t>(depth) + 1);
  for (int i = 0; i <= depth; ++i)
    z[i] = moments[i].numerator() * (lcm_den / moments[i].denominator());

  auto bareiss_det = [](std::vector<std::vector<mpz_class>> a) -> mpz_class {
    const int n = static_cast<int>(a.size());
    mpz_class denom(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        int swap_row = -1;
        for (int i = k + 1; i < n; ++i)
          if (a[i][k] != 0) {
            swap_row = i;
            break;
          }
        if (swap_row < 0) return 0;
        std::swap(a[k], a[swap_row]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) {
          mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
        }
      denom = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  };

  auto family = [&](int shift) {
    std::vector<Rat> out;
    for (int m = 0; 2 * m + shift <= depth; ++m) {
      std::vector<std::vector<mpz_class>> h(static_cast<std::size_t>(m) + 1,
                                            std::vector<mpz_class>(static_cast<std::size_t>(m) + 1));
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) h[i][j] = z[static_cast<std::size_t>(i + j + shift)];
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), lcm_den.get_mpz_t(), static_cast<unsigned long>(m) + 1);
      out.emplace_back(bareiss_det(std::move(h)), scale);
    }
    return out;
  };
  return {family(0), family(1)};
}

namespace detail {

struct LpPlusRun {
  SFractionReport<Rat> report;  // of the s0-normalized moments (alpha_0 = 1)
  Rat s0;
};

inline LpPlusRun lp_plus_expand(const HyperParams& params, int depth) {
  auto moments = signed_logderiv_moments(params, depth);
  LpPlusRun run;
  run.s0 = moments[0];
  if (run.s0.is_zero()) throw ZeroLeadingMomentError{};
  for (Rat& m : moments) m = m / run.s0;
  run.report = sfraction_expand<Rat>(moments, depth);
  return run;
}

}  // namespace detail

/// Composes the signed log-derivative moments with the continued-fraction
/// criterion. FirstNegativeAlpha certifies pFq(params) is NOT in LP+;
/// StieltjesUpTo(depth) is supporting evidence only.
inline Verdict lp_plus_verdict(const HyperParams& params, int depth) {
  params.validate();
  for (const Rat& a : params.upper)
    if (!(a > Rat(0))) throw InvalidParamsError("lp_plus_verdict needs positive parameters");
  for (const Rat& b : params.lower)
    if (!(b > Rat(0))) throw InvalidParamsError("lp_plus_verdict needs positive parameters");
  const auto run = detail::lp_plus_expand(params, depth);
  return detail::verdict_from_report(run.report, run.s0);
}

}  // namespace polya
