#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "wolffd/dirichlet_space.hpp"
#include "wolffd/io.hpp"
#include "wolffd/multiplier_ops.hpp"
#include "wolffd/verify_lemmas.hpp"

namespace {

using namespace wolffd;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;       // ran fine, some check failed
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitRefinement = 4;

bool parse_grid(const std::string& s, int& nr, int& ntheta) {
  const auto x = s.find('x');
  if (x == std::string::npos) return false;
  try {
    nr = std::stoi(s.substr(0, x));
    ntheta = std::stoi(s.substr(x + 1));
  } catch (...) {
    return false;
  }
  return nr >= 2 && ntheta >= 4;
}

void apply_threads(int threads) {
  if (threads > 0) {
    set_thread_cap(static_cast<unsigned>(threads));
  } else if (const char* env = std::getenv("WOLFFD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) set_thread_cap(static_cast<unsigned>(v));
  }
}

int run_solve(const std::string& input, const std::string& output, const std::string& grid,
              int degree, double tol, bool normalize, int fit_degree) {
  WolffProblem p = read_problem_file(input);
  if (!grid.empty() && !parse_grid(grid, p.params.grid_nr, p.params.grid_ntheta)) {
    throw parse_error("--grid expects NRxNTHETA, e.g. 128x256");
  }
  if (degree > 0) p.params.N = degree;
  if (tol > 0.0) p.params.tol = tol;
  if (normalize) p.params.normalize = true;
  if (fit_degree >= 0) p.params.fit_degree = fit_degree;

  WolffSolution sol = solve_uh(p);
  // p was copied into the solver; re-apply the echo fields it may have rescaled
  WolffProblem echo = p;
  echo.delta *= sol.applied_scale * sol.applied_scale;
  atomic_write(output, solution_to_json(sol, echo));

  const bool ok = sol.residual <= p.params.tol &&
                  sol.analyticity_defect <= 10.0 * p.params.tol &&
                  sol.norm_ratio <= sol.K_bound;
  std::cout << "residual            " << sol.residual << "\n"
            << "analyticity_defect  " << sol.analyticity_defect << "\n"
            << "norm_ratio          " << sol.norm_ratio << "  (K bound " << sol.K_bound
            << ")\n"
            << "fit_residual        " << sol.fit_residual << "\n"
            << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFail;
}

WolffProblem default_problem() {
  // F = (z/2, 1/2), H = z/2: the standing example problem
  WolffProblem p;
  p.F.polys = {AnalyticPoly({0.0, 0.5}), AnalyticPoly({0.5})};
  p.H = AnalyticPoly({0.0, 0.5});
  p.delta = 0.25;
  return p;
}

int run_verify(const std::string& suite, int trials, unsigned seed, const std::string& input,
               const std::string& output) {
  VerificationReport report;
  const bool need_problem = suite == "terms" || suite == "boundary";
  WolffProblem p;
  if (!input.empty()) {
    p = read_problem_file(input);
  } else if (need_problem || suite == "all") {
    p = default_problem();
  }

  if (suite == "lemma2" || suite == "all") {
    MultiplierTuple F;
    F.polys = {AnalyticPoly({0.0, 0.5}), AnalyticPoly({0.5})};
    report.merge(verify_lemma2(F, trials, seed));
  }
  if (suite == "lemma3" || suite == "all") {
    report.merge(verify_lemma3(30, 50, seed));
  }
  if (suite == "lemma4" || suite == "all") {
    const DiskGrid grid = make_polar_grid(128, 256);
    report.merge(verify_lemma4(AnalyticPoly({0.0, 1.0}), grid, 64, "z"));
    report.merge(verify_lemma4(AnalyticPoly({0.0, 0.0, 1.0}), grid, 64, "z^2"));
  }
  if (suite == "terms" || suite == "all") {
    report.merge(verify_term_estimates(p));
  }
  if (suite == "boundary" || suite == "all") {
    report.merge(verify_boundary_c0(p));
  }
  if (report.rows.empty()) {
    std::cerr << "unknown suite: " << suite
              << " (expected lemma2|lemma3|lemma4|terms|boundary|all)\n";
    return kExitParse;
  }

  std::cout << report.to_text();
  const std::string base = output.empty() ? "verify_" + suite : output;
  atomic_write(base + ".csv", report.to_csv());
  atomic_write(base + ".json", report_to_json(report));
  std::cout << "report written to " << base << ".csv / .json\n";
  return report.all_pass() ? kExitOk : kExitFail;
}

int run_norm(const std::string& input, int degree) {
  const MultiplierTuple F = read_multiplier_file(input);
  const int N = std::max(degree, F.max_degree());
  for (int j = 0; j < F.size(); ++j) {
    std::cout << "||M_f" << (j + 1) << "||  = " << op_norm(mult_matrix(F.polys[j], N))
              << "\n";
  }
  const double cn = column_norm(F, N);
  const double rn = row_norm(F, N);
  std::cout << "column_norm = " << cn << "\nrow_norm    = " << rn << "\n";
  const double sqrt18 = std::sqrt(18.0);
  const bool ok = rn <= sqrt18 * cn * (1.0 + 1e-9);
  std::cout << "row <= sqrt(18) * column: " << (ok ? "PASS" : "FAIL") << " (ratio "
            << (cn > 0 ? rn / cn : 0.0) << " vs " << sqrt18 << ")\n";
  return ok ? kExitOk : kExitFail;
}

int run_radical(const std::string& input, int mmax, const std::string& grid) {
  const WolffProblem p = read_problem_file(input);
  int nr = 64, ntheta = 128;
  if (!grid.empty() && !parse_grid(grid, nr, ntheta)) {
    throw parse_error("--grid expects NRxNTHETA");
  }
  const RadicalResult res = radical_diagnostic(p.F, p.H, mmax, nr, ntheta);
  std::cout << "note: grid maximization is a heuristic for the sup over the disk, "
               "not a proof\n";
  if (res.m) {
    std::cout << "m = " << *res.m << ", C0 = " << res.C0 << "\n";
  } else {
    std::cout << "no certificate up to m = " << mmax << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet-space ideal solver (F G^T = H^3) and verification harness"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (or WOLFFD_THREADS)");

  auto* solve = app.add_subcommand("solve", "solve F G^T = H^3 h from a problem file");
  std::string in_path, out_path = "solution.json", grid;
  int degree = 0, fit_degree = -1;
  double tol = 0.0;
  bool normalize = false;
  solve->add_option("--input,-i", in_path, "problem JSON")->required();
  solve->add_option("--output,-o", out_path, "solution JSON path");
  solve->add_option("--grid", grid, "disk grid NRxNTHETA");
  solve->add_option("--degree", degree, "recovery degree N");
  solve->add_option("--tol", tol, "fit/residual tolerance");
  solve->add_option("--fit-degree", fit_degree, "bidegree of the w fit");
  solve->add_flag("--normalize", normalize, "rescale F to unit column norm");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, v_input, v_output;
  int trials = 100;
  unsigned seed = 42;
  verify->add_option("suite", suite, "lemma2|lemma3|lemma4|terms|boundary|all")->required();
  verify->add_option("--trials", trials, "random trials for lemma2");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--input", v_input, "problem JSON for terms/boundary");
  verify->add_option("--output", v_output, "report basename (default verify_<suite>)");

  auto* norm = app.add_subcommand("norm", "multiplier norms of a tuple");
  std::string n_input;
  int n_degree = 64;
  norm->add_option("--input,-i", n_input, "multiplier JSON {\"F\": [...]}")->required();
  norm->add_option("--degree", n_degree, "truncation degree");

  auto* radical = app.add_subcommand("radical", "radical membership diagnostic");
  std::string r_input, r_grid;
  int mmax = 8;
  radical->add_option("--input,-i", r_input, "problem JSON")->required();
  radical->add_option("--mmax", mmax, "largest power to try");
  radical->add_option("--grid", r_grid, "coarse grid NRxNTHETA");

  CLI11_PARSE(app, argc, argv);
  apply_threads(threads);

  try {
    if (solve->parsed()) {
      return run_solve(in_path, out_path, grid, degree, tol, normalize, fit_degree);
    }
    if (verify->parsed()) return run_verify(suite, trials, seed, v_input, v_output);
    if (norm->parsed()) return run_norm(n_input, n_degree);
    if (radical->parsed()) return run_radical(r_input, mmax, r_grid);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const refinement_error& e) {
    std::cerr << "refinement needed: " << e.what() << "\n";
    return kExitRefinement;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
