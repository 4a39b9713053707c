#pragma once

#include <atomic>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <polya/errors.hpp>
#include <polya/hyper.hpp>
#include <polya/rat.hpp>
#include <polya/sfrac.hpp>

namespace polya {

/// One evaluated grid point for 1F2(b1+gamma; b1, b2; .).
/// n is the index of the first negative alpha (-1 when there is none),
/// alpha_sign its exact sign at that index (+1 when all of alpha_1..alpha_nmax
/// are positive, 0 for a terminated fraction or a degenerate pivot).
struct ScanPoint {
  Rat b1, gamma, b2;
  int n = -1;
  int alpha_sign = 0;
  Verdict verdict;
  int depth = 0;
};

/// Exact sign of alpha_n for 1F2(b1+gamma; b1, b2; .), plus the verdict of the
/// depth-d expansion. The sign is 0 with a Degenerate verdict when a pivot
/// k <= n vanishes with nonzero remainder, and 0 with a StieltjesUpTo verdict
/// when the fraction terminates legitimately before n.
inline std::pair<int, Verdict> alpha_sign_at(const Rat& b1, const Rat& gamma, const Rat& b2,
                                             int n, int depth = -1) {
  if (n < 1) throw InvalidParamsError("alpha index must be >= 1");
  if (depth < 0) depth = n;
  if (depth < n) throw InvalidParamsError("depth must be >= n");
  if (!(b1 > Rat(0)) || !(b2 > Rat(0))) throw InvalidParamsError("alpha_sign_at needs b1, b2 > 0");
  HyperParams params{{b1 + gamma}, {b1, b2}};
  params.validate();
  const auto run = detail::lp_plus_expand(params, depth);
  const Verdict verdict = detail::verdict_from_report(run.report, run.s0);
  int sign = 0;
  if (run.report.stop_index >= 0 && run.report.stop_index <= n)
    sign = 0;  // zero pivot at or before n: alpha_n is 0 (terminated) or unusable (degenerate)
  else
    sign = run.report.alphas[static_cast<std::size_t>(n)].sign();
  return {sign, verdict};
}

/// Rational bracket around the b2 where alpha_n changes sign.
struct ThresholdResult {
  Rat bracket_lo, bracket_hi, width;
  int n = 0;
  Rat b1, gamma;

  std::string to_json() const {
    std::ostringstream os;
    os << "{\"b1\":\"" << b1.str() << "\",\"gamma\":\"" << gamma.str() << "\",\"n\":" << n
       << ",\"lo\":\"" << bracket_lo.str() << "\",\"hi\":\"" << bracket_hi.str()
       << "\",\"width\":\"" << width.str() << "\"}";
    return os.str();
  }
};

/// Bisection with exact sign evaluation at rational midpoints. Requires
/// alpha_n >= 0 at lo and alpha_n < 0 at hi (BadBracketError otherwise) and
/// assumes a single sign change inside; a degenerate pivot at an endpoint or
/// midpoint surfaces as DegeneratePivotError.
inline ThresholdResult threshold_bisect(const Rat& b1, const Rat& gamma, int n, Rat lo, Rat hi,
                                        const Rat& precision) {
  if (!(precision > Rat(0))) throw InvalidParamsError("precision must be > 0");
  if (!(lo < hi)) throw BadBracketError("empty bracket: lo must be < hi");
  auto sign_of = [&](const Rat& b2) {
    const auto [sign, verdict] = alpha_sign_at(b1, gamma, b2, n);
    if (verdict.kind == Verdict::Kind::Degenerate) throw DegeneratePivotError(verdict.k);
    return sign;
  };
  if (sign_of(lo) < 0) throw BadBracketError("alpha_n already negative at lo");
  if (sign_of(hi) >= 0) throw BadBracketError("alpha_n not negative at hi");
  while (hi - lo > precision) {
    const Rat mid = (lo + hi) / Rat(2);
    if (sign_of(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return ThresholdResult{lo, hi, hi - lo, n, b1, gamma};
}

namespace detail {

template <class Body>
void parallel_for(int tasks, int threads, Body&& body) {
  if (threads < 1) threads = 1;
  if (threads == 1 || tasks <= 1) {
    for (int i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  const int n = std::min(threads, tasks);
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Evaluates every (gamma, b2) pair on the grid, in parallel, reporting the
/// first negative alpha up to n_max per point. Output order is input order
/// (gamma outer, b2 inner) no matter how execution interleaves.
inline std::vector<ScanPoint> grid_scan(const Rat& b1, const std::vector<Rat>& gamma_range,
                                        const std::vector<Rat>& b2_range, int n_max, int depth,
                                        int threads = 1) {
  if (n_max < 1) throw InvalidParamsError("n_max must be >= 1");
  if (depth < n_max) throw InvalidParamsError("depth must be >= n_max");
  std::vector<ScanPoint> points(gamma_range.size() * b2_range.size());
  const int tasks = static_cast<int>(points.size());
  detail::parallel_for(tasks, threads, [&](int idx) {
    const Rat& gamma = gamma_range[static_cast<std::size_t>(idx) / b2_range.size()];
    const Rat& b2 = b2_range[static_cast<std::size_t>(idx) % b2_range.size()];
    ScanPoint& pt = points[static_cast<std::size_t>(idx)];
    pt.b1 = b1;
    pt.gamma = gamma;
    pt.b2 = b2;
    pt.depth = depth;
    try {
      HyperParams params{{b1 + gamma}, {b1, b2}};
      params.validate();
      const auto run = detail::lp_plus_expand(params, depth);
      // verdict restricted to the searched window alpha_1..alpha_{n_max}
      pt.verdict.depth = n_max;
      pt.verdict.s0 = run.s0;
      pt.alpha_sign = +1;
      const int last = std::min<int>(n_max, static_cast<int>(run.report.alphas.size()) - 1);
      for (int k = 1; k <= last; ++k) {
        const Rat& a = run.report.alphas[static_cast<std::size_t>(k)];
        if (a.sign() < 0) {
          pt.n = k;
          pt.alpha_sign = -1;
          pt.verdict.kind = Verdict::Kind::FirstNegativeAlpha;
          pt.verdict.k = k;
          pt.verdict.alpha = a;
          break;
        }
        if (a.is_zero()) {
          pt.alpha_sign = 0;
          if (run.report.status == SStatus::Degenerate) {
            pt.verdict.kind = Verdict::Kind::Degenerate;
            pt.verdict.k = k;
          }
          break;
        }
      }
    } catch (const std::exception&) {
      // per-point failure: recorded as degenerate rather than aborting the scan
      pt.alpha_sign = 0;
      pt.verdict.kind = Verdict::Kind::Degenerate;
      pt.verdict.depth = depth;
      pt.verdict.k = -1;
    }
  });
  return points;
}

/// CSV row schema: b1, gamma, b2, n_first_negative (or "none"/"degenerate"),
/// alpha_value, depth.
inline std::string scan_csv_header() { return "b1,gamma,b2,n_first_negative,alpha_value,depth"; }

inline std::string to_csv_row(const ScanPoint& pt) {
  std::ostringstream os;
  os << pt.b1.str() << "," << pt.gamma.str() << "," << pt.b2.str() << ",";
  if (pt.verdict.kind == Verdict::Kind::FirstNegativeAlpha)
    os << pt.n << "," << pt.verdict.alpha.str();
  else if (pt.verdict.kind == Verdict::Kind::Degenerate)
    os << "degenerate,";
  else
    os << "none,";
  os << "," << pt.depth;
  return os.str();
}

inline std::string to_json(const ScanPoint& pt) {
  std::ostringstream os;
  os << "{\"b1\":\"" << pt.b1.str() << "\",\"gamma\":\"" << pt.gamma.str() << "\",\"b2\":\""
     << pt.b2.str() << "\",\"verdict\":" << to_json(pt.verdict) << ",\"depth\":" << pt.depth
     << "}";
  return os.str();
}

}  // namespace polya
