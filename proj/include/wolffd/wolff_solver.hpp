#pragma once

#include <Eigen/Dense>
#include <optional>

#include "wolffd/cauchy_singular.hpp"
#include "wolffd/disk_core.hpp"
#include "wolffd/poly.hpp"
#include "wolffd/quad_expansion.hpp"

namespace wolffd {

struct SolverParams {
  int N = 48;            // coefficient recovery degree
  int grid_nr = 128;     // disk grid
  int grid_ntheta = 256;
  double tol = 1e-6;     // sup-norm tolerance for the w fit and the residual
  bool normalize = false;
  int fit_degree = -1;   // bidegree of the monomial fit of w; -1 picks a default
  double r_rec = 0.9;    // coefficient recovery circle
};

struct WolffProblem {
  MultiplierTuple F;
  AnalyticPoly H;
  AnalyticPoly h = AnalyticPoly::constant(1.0);
  double delta = 0.0;  // certified lower bound for F F^* on the closed disk
  SolverParams params;
};

struct ValidationResult {
  bool ok = true;
  std::string message;       // empty when ok
  double min_ffstar = 0.0;   // worst F F^* over the grids
  cplx min_ffstar_node;
  double worst_b_margin = 0.0;  // min over nodes of FF^* - |H|^2 (negative = violated)
  cplx worst_b_node;
  double column_norm_F = 0.0;
  double applied_scale = 1.0;  // 1/c when --normalize rescaled F by c
};

/// Checks the three hypotheses on the problem's grids: FF^* >= delta,
/// |H|^2 <= FF^* at every node, and ||M_F^C|| <= 1 + 1e-8 at truncation N.
/// With params.normalize set, F (and delta) are rescaled by the column norm
/// before the checks; the mutated problem is written back.
ValidationResult validate_problem(WolffProblem& p);

struct NormalizedData {
  MultiplierTuple F;
  AnalyticPoly H;
  cplx a;  // Mobius parameter; 0 means unchanged
};

/// When H(0) = 0, precomposes H and F with beta(z) = (a-z)/(1-conj(a) z)
/// where a is the grid point of maximal |H| (smallest index on ties), so the
/// returned H no longer vanishes at the origin.
NormalizedData normalize_origin(const MultiplierTuple& F, const AnalyticPoly& H,
                                const DiskGrid& grid, int N_out);

/// Intermediate quantities of a solve, kept for the verification harness.
struct SolveDetail {
  DiskGrid grid;
  BoundaryGrid bgrid;
  MultiplierTuple F, Fp;  // F and its derivative
  AnalyticPoly H, h, H3h;
  int K = 0;  // number of Q columns
  std::vector<QuadExpansion> w_fit;      // fitted components of w
  std::vector<QuadExpansion> w_hat_fit;  // their Cauchy transforms
  double fit_residual_sup = 0.0;
  double fit_residual_l2 = 0.0;

  Eigen::VectorXcd F_values(cplx z) const;
  /// w(z) = Q(z)^* F'(z)^* H^3(z) h(z) / (F F^*)^2, the exact node values.
  Eigen::VectorXcd w_true(cplx z) const;
  Eigen::VectorXcd w_fit_value(cplx z) const;
  /// Componentwise Cauchy transform of the fitted w.
  Eigen::VectorXcd w_hat(cplx z) const;
  /// First term F^* H^3 h / (F F^*).
  Eigen::VectorXcd first_term(cplx z) const;
  /// u_h(z) = first_term(z) - Q(z) w_hat(z); analytic up to the fit error.
  Eigen::VectorXcd u_smooth(cplx z) const;
  /// u_smooth at every angle of the circle |z| = r (bulk path).
  std::vector<Eigen::VectorXcd> u_smooth_ring(double r,
                                              const std::vector<double>& angles) const;
};

struct WolffSolution {
  std::vector<AnalyticPoly> u;  // n recovered components
  double residual = 0.0;            // max grid |F u - H^3 h|
  double analyticity_defect = 0.0;  // worst negative-frequency mass
  double norm_ratio = 0.0;          // ||u||_D / ||h||_D
  double fit_residual = 0.0;        // sup-norm residual of the w fit
  double mh_estimate = 0.0;         // truncated op_norm of M_H
  double K_bound = 0.0;             // norm_bound_K(mh_estimate)
  double applied_scale = 1.0;
};

/// The headline construction
///   u_h = F^* H^3 h / (F F^*) - Q (Q^* F'^* H^3 h / (F F^*)^2)^hat.
/// Exact values of w on the grid are fitted by a MonomialExpansion, the
/// closed-form Cauchy transform is applied, u_h is assembled on circles and
/// its analytic coefficients recovered by Fourier analysis at |z| = r_rec.
WolffSolution solve_uh(WolffProblem p, SolveDetail* detail = nullptr);

/// solve_uh with h = 1: returns G with F G^T = H^3 on the grid.
WolffSolution solve_ideal(const MultiplierTuple& F, const AnalyticPoly& H,
                          const SolverParams& params, double delta,
                          SolveDetail* detail = nullptr);

/// The multiplier-norm bound sqrt(144 mh^2 + 73104).
double norm_bound_K(double mh);

struct RadicalResult {
  std::optional<int> m;
  double C0 = 0.0;
  std::vector<double> sup_coarse, sup_fine;  // per-m grid suprema
};

/// Sampling diagnostic for radical membership: the smallest m for which
/// sup |H|^m / (F F^*) is stable under one grid refinement (ratio <= 2).
/// A grid maximum is a heuristic for the sup over the disk, not a proof.
RadicalResult radical_diagnostic(const MultiplierTuple& F, const AnalyticPoly& H,
                                 int m_max, int grid_nr, int grid_ntheta);

}  // namespace wolffd
