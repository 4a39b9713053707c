// polya-gate: exact LP+ membership tests for generalized hypergeometric
// series, built on rational arithmetic end to end. Exit codes are part of the
// contract: 0 ok, 2 usage error, 3 certified not in LP+, 4 degenerate pivot,
// 5 bad bisection bracket.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <polya/polya.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotLpPlus = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitBadBracket = 5;

std::vector<polya::Rat> parse_rat_list(const std::string& csv) {
  std::vector<polya::Rat> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto piece = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (piece.empty()) throw polya::InvalidParamsError("empty entry in list: '" + csv + "'");
    out.push_back(polya::Rat::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("POLYA_GATE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void warn_if_costly(const std::vector<polya::Rat>& b2s, int depth) {
  if (depth < 7) return;
  for (const auto& b2 : b2s)
    if (b2 >= polya::Rat(100000)) {
      std::cerr << "warning: exact expansion at depth " << depth
                << " with b2 >= 1e5 grows large integers; this may take a while\n";
      return;
    }
}

int exit_code_for(const polya::Verdict& v) {
  switch (v.kind) {
    case polya::Verdict::Kind::StieltjesUpTo: return kExitOk;
    case polya::Verdict::Kind::FirstNegativeAlpha: return kExitNotLpPlus;
    case polya::Verdict::Kind::Degenerate: return kExitDegenerate;
  }
  return kExitUsage;
}

std::string verdict_text(const polya::Verdict& v) {
  using Kind = polya::Verdict::Kind;
  switch (v.kind) {
    case Kind::StieltjesUpTo:
      return "stieltjes up to depth " + std::to_string(v.depth) +
             " (evidence only, not a membership proof)";
    case Kind::FirstNegativeAlpha:
      return "alpha_" + std::to_string(v.k) + " = " + v.alpha.str() +
             " < 0: certified not in LP+";
    case Kind::Degenerate:
      return "alpha_" + std::to_string(v.k) + " = 0 with nonzero remainder: inconclusive";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Laguerre-Polya class (LP+) tests for pFq series"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;  // per-command default: json, except scan which emits csv
  app.add_option("--format", format, "output format: json, text, or csv (scan only)");
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for grid scans")->check(CLI::Range(1, 1024));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized reports");

  // check <params>
  auto* cmd_check = app.add_subcommand("check", "LP+ verdict for pFq given \"a1,..;b1,..\"");
  std::string check_params;
  int check_depth = 12;
  cmd_check->add_option("params", check_params, "parameter string, e.g. \"3/2;1,2\"")->required();
  cmd_check->add_option("--depth", check_depth, "certificate depth")->check(CLI::Range(1, 4096));

  // threshold
  auto* cmd_threshold = app.add_subcommand("threshold", "bisect the b2 where alpha_n turns negative");
  std::string th_b1 = "1", th_gamma, th_lo, th_hi, th_prec = "1/1000";
  int th_n = 3;
  cmd_threshold->add_option("--b1", th_b1, "b1 (rational)");
  cmd_threshold->add_option("--gamma", th_gamma, "gamma with a1 = b1 + gamma")->required();
  cmd_threshold->add_option("--n", th_n, "alpha index")->required()->check(CLI::Range(1, 64));
  cmd_threshold->add_option("--lo", th_lo, "left endpoint (alpha_n >= 0 here)")->required();
  cmd_threshold->add_option("--hi", th_hi, "right endpoint (alpha_n < 0 here)")->required();
  cmd_threshold->add_option("--prec", th_prec, "bracket width target (rational)");

  // symbolic
  auto* cmd_symbolic = app.add_subcommand("symbolic", "degree/leading-coefficient check for alpha_n(b2)");
  std::string sy_gamma, sy_b1 = "1";
  int sy_n = 3;
  cmd_symbolic->add_option("--n", sy_n, "alpha index")->required()->check(CLI::Range(1, 9));
  cmd_symbolic->add_option("--gamma", sy_gamma, "gamma (rational)")->required();
  cmd_symbolic->add_option("--b1", sy_b1, "b1 (rational)");

  // identity driver|bailey
  auto* cmd_identity = app.add_subcommand("identity", "coefficientwise product identities");
  cmd_identity->require_subcommand(1);
  auto* id_driver = cmd_identity->add_subcommand("driver", "1F2(a-1/2; a, 2a-1; x) = [0F1(-;a;x/4)]^2");
  std::string idd_a;
  int idd_order = 30;
  id_driver->add_option("--a", idd_a, "a (rational, > 0, != 1/2)")->required();
  id_driver->add_option("--order", idd_order, "comparison order")->check(CLI::Range(1, 4096));
  auto* id_bailey = cmd_identity->add_subcommand("bailey",
      "2F3((a+b)/2,(a+b-1)/2; a,b,a+b-1; x) = 0F1(-;a;x/4) 0F1(-;b;x/4)");
  std::string idb_a, idb_b;
  int idb_order = 30;
  id_bailey->add_option("--a", idb_a, "a (rational, > 0)")->required();
  id_bailey->add_option("--b", idb_b, "b (rational, > 0)")->required();
  id_bailey->add_option("--order", idb_order, "comparison order")->check(CLI::Range(1, 4096));

  // laguerre
  auto* cmd_laguerre = app.add_subcommand("laguerre", "e^{-x} 1F1(b+m;b;x) reduction + root count");
  std::string lg_b;
  int lg_m = 0;
  cmd_laguerre->add_option("--b", lg_b, "b (rational, > 0)")->required();
  cmd_laguerre->add_option("--m", lg_m, "integer offset m >= 0")->required()->check(CLI::Range(0, 64));

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "grid scan for the first negative alpha");
  std::string sc_b1 = "1", sc_gammas, sc_b2s;
  int sc_nmax = 5, sc_depth = -1;
  cmd_scan->add_option("--b1", sc_b1, "b1 (rational)");
  cmd_scan->add_option("--gamma", sc_gammas, "comma-separated gamma grid")->required();
  cmd_scan->add_option("--b2", sc_b2s, "comma-separated b2 grid")->required();
  cmd_scan->add_option("--nmax", sc_nmax, "search alpha_1..alpha_nmax")->check(CLI::Range(1, 64));
  cmd_scan->add_option("--depth", sc_depth, "expansion depth (default max(12, nmax))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }
  if (format.empty()) format = *cmd_scan ? "csv" : "json";

  try {
    if (*cmd_check) {
      const auto params = polya::HyperParams::parse(check_params);
      for (const auto& b : params.lower) warn_if_costly({b}, check_depth);
      const auto verdict = polya::lp_plus_verdict(params, check_depth);
      if (format == "text")
        std::cout << verdict_text(verdict) << "\n";
      else
        std::cout << polya::to_json(verdict) << "\n";
      return exit_code_for(verdict);
    }

    if (*cmd_threshold) {
      const auto result = polya::threshold_bisect(
          polya::Rat::parse(th_b1), polya::Rat::parse(th_gamma), th_n, polya::Rat::parse(th_lo),
          polya::Rat::parse(th_hi), polya::Rat::parse(th_prec));
      if (format == "text")
        std::cout << "alpha_" << th_n << " sign change inside [" << result.bracket_lo << ", "
                  << result.bracket_hi << "], width " << result.width << "\n";
      else
        std::cout << result.to_json() << "\n";
      return kExitOk;
    }

    if (*cmd_symbolic) {
      const auto rep =
          polya::conjecture6b_check(sy_n, polya::Rat::parse(sy_gamma), polya::Rat::parse(sy_b1));
      if (format == "text")
        std::cout << "n=" << rep.n << " degree " << rep.degree_actual << " (expected "
                  << rep.degree_expected << "), lead " << rep.lead_actual << " vs "
                  << rep.lead_expected << (rep.exact_normalization ? " (exact)" : " (up to positive constant)")
                  << ": " << (rep.match ? "match" : "mismatch") << "\n";
      else
        std::cout << rep.to_json() << "\n";
      return rep.match ? kExitOk : 1;
    }

    if (*cmd_identity) {
      bool holds = false;
      int order = 0;
      std::string which;
      if (*id_driver) {
        which = "driver";
        order = idd_order;
        holds = polya::identity_driver_check(polya::Rat::parse(idd_a), idd_order);
      } else {
        which = "bailey";
        order = idb_order;
        holds = polya::identity_bailey_check(polya::Rat::parse(idb_a), polya::Rat::parse(idb_b),
                                             idb_order);
      }
      if (format == "text")
        std::cout << which << " identity " << (holds ? "holds" : "FAILS") << " through order "
                  << order << "\n";
      else
        std::cout << "{\"identity\":\"" << which << "\",\"order\":" << order
                  << ",\"holds\":" << (holds ? "true" : "false") << "}\n";
      return holds ? kExitOk : 1;
    }

    if (*cmd_laguerre) {
      const polya::Rat b = polya::Rat::parse(lg_b);
      const auto poly = polya::laguerre_reduction(b, lg_m);
      // the reduced polynomial has its roots on the negative axis; count them
      // through the flip y -> -x so "m real roots in (0, inf)" is the check
      std::vector<polya::Rat> flipped(poly.coeffs());
      for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
      const int roots = polya::sturm_real_roots(polya::Poly1(std::move(flipped), "y"),
                                                polya::Rat(0), std::nullopt);
      const bool ok = roots == lg_m;
      if (format == "text") {
        std::cout << "degree " << poly.degree() << " polynomial " << poly << "; " << roots
                  << " real roots in (0, inf) after y -> -x" << (ok ? "" : " (MISMATCH)") << "\n";
      } else {
        std::cout << "{\"b\":\"" << b.str() << "\",\"m\":" << lg_m << ",\"degree\":"
                  << poly.degree() << ",\"polynomial\":" << polya::to_json(poly)
                  << ",\"real_positive_roots\":" << roots
                  << ",\"ok\":" << (ok ? "true" : "false") << "}\n";
      }
      return ok ? kExitOk : 1;
    }

    if (*cmd_scan) {
      const auto gammas = parse_rat_list(sc_gammas);
      const auto b2s = parse_rat_list(sc_b2s);
      const int depth = sc_depth < 0 ? std::max(12, sc_nmax) : std::max(sc_depth, sc_nmax);
      warn_if_costly(b2s, std::max(depth, sc_nmax));
      const auto points =
          polya::grid_scan(polya::Rat::parse(sc_b1), gammas, b2s, sc_nmax, depth, threads);
      if (format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < points.size(); ++i)
          std::cout << (i ? "," : "") << polya::to_json(points[i]);
        std::cout << "]\n";
      } else {  // csv is the scan default
        std::cout << polya::scan_csv_header() << "\n";
        for (const auto& pt : points) std::cout << polya::to_csv_row(pt) << "\n";
      }
      return kExitOk;
    }
  } catch (const polya::BadBracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadBracket;
  } catch (const polya::DegeneratePivotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const polya::InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
