#include "wolffd/wolff_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wolffd/dirichlet_space.hpp"
#include "wolffd/koszul_q.hpp"
#include "wolffd/multiplier_ops.hpp"

namespace wolffd {

namespace {

int default_fit_degree(const WolffProblem& p, const AnalyticPoly& H3h) {
  // Twice the polynomial bidegree of the numerator data, floored: the factor
  // 1/(FF^*)^2 needs a dozen radial powers per frequency before its best
  // polynomial approximation reaches the solver tolerance.
  const int base = 2 * (std::max(H3h.degree(), 0) + std::max(p.F.max_degree(), 1));
  return std::max(base, 16);
}

struct CircleSampler {
  // angles of an equispaced circle grid plus the matching BoundaryGrid
  BoundaryGrid bg;
  double r = 0.0;
};

}  // namespace

ValidationResult validate_problem(WolffProblem& p) {
  ValidationResult res;
  if (p.F.size() < 1) {
    res.ok = false;
    res.message = "empty multiplier tuple";
    return res;
  }
  if (!(p.delta > 0.0)) {
    res.ok = false;
    res.message = "delta must be a positive lower bound for F F*";
    return res;
  }
  const int N = std::max({p.params.N, p.F.max_degree(), 1});
  double cn = column_norm(p.F, N);
  if (p.params.normalize && cn > 1.0 + 1e-8) {
    const double scale = 1.0 / cn;
    p.F = p.F.scaled(scale);
    p.delta *= scale * scale;
    res.applied_scale = scale;
    cn = column_norm(p.F, N);
  }
  res.column_norm_F = cn;

  const DiskGrid grid = make_polar_grid(p.params.grid_nr, p.params.grid_ntheta);
  const BoundaryGrid bgrid = make_boundary_grid(p.params.grid_ntheta);

  res.min_ffstar = std::numeric_limits<double>::infinity();
  res.worst_b_margin = std::numeric_limits<double>::infinity();
  auto scan = [&](cplx z) {
    const double ff = p.F.abs2(z);
    if (ff < res.min_ffstar) {
      res.min_ffstar = ff;
      res.min_ffstar_node = z;
    }
    const double margin = ff - std::norm(p.H.eval(z));
    if (margin < res.worst_b_margin) {
      res.worst_b_margin = margin;
      res.worst_b_node = z;
    }
  };
  for (const auto& z : grid.nodes) scan(z);
  for (const auto& z : bgrid.nodes) scan(z);

  std::ostringstream msg;
  if (res.min_ffstar < p.delta) {
    res.ok = false;
    msg << "hypothesis: F F* = " << res.min_ffstar << " < delta = " << p.delta
        << " at node (" << res.min_ffstar_node.real() << ", " << res.min_ffstar_node.imag()
        << "); ";
  }
  if (res.worst_b_margin < -1e-12) {
    res.ok = false;
    msg << "hypothesis (b): |H|^2 exceeds F F* by " << -res.worst_b_margin << " at node ("
        << res.worst_b_node.real() << ", " << res.worst_b_node.imag() << "); ";
  }
  if (cn > 1.0 + 1e-8) {
    res.ok = false;
    msg << "hypothesis (a): column norm " << cn << " > 1 (pass normalize to rescale); ";
  }
  res.message = msg.str();
  return res;
}

NormalizedData normalize_origin(const MultiplierTuple& F, const AnalyticPoly& H,
                                const DiskGrid& grid, int N_out) {
  if (H.is_zero()) {
    throw hypothesis_error("normalize_origin: H is identically zero (G = 0 solves the problem)");
  }
  if (H.coeff(0) != cplx(0.0)) {
    return NormalizedData{F, H, cplx(0.0)};
  }
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = std::abs(H.eval(grid.nodes[i]));
    if (v > best_abs) {  // strict: ties keep the smallest index
      best_abs = v;
      best = i;
    }
  }
  const cplx a = grid.nodes[best];
  NormalizedData out;
  out.a = a;
  out.H = compose_poly_mobius(H, a, N_out);
  out.F.polys.reserve(F.polys.size());
  for (const auto& f : F.polys) out.F.polys.push_back(compose_poly_mobius(f, a, N_out));
  return out;
}

Eigen::VectorXcd SolveDetail::F_values(cplx z) const {
  const auto v = F.eval(z);
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), v.size());
}

Eigen::VectorXcd SolveDetail::w_true(cplx z) const {
  if (K == 0) return Eigen::VectorXcd(0);
  const Eigen::MatrixXcd Q = q_of_F(F, z);
  const auto fp = Fp.eval(z);
  Eigen::VectorXcd fps(fp.size());
  for (Eigen::Index j = 0; j < fps.size(); ++j) fps(j) = std::conj(fp[j]);
  const double ff = F.abs2(z);
  return Q.adjoint() * fps * (H3h.eval(z) / (ff * ff));
}

Eigen::VectorXcd SolveDetail::w_fit_value(cplx z) const {
  Eigen::VectorXcd v(K);
  for (int k = 0; k < K; ++k) v(k) = w_fit[k].eval(z);
  return v;
}

Eigen::VectorXcd SolveDetail::w_hat(cplx z) const {
  Eigen::VectorXcd v(K);
  for (int k = 0; k < K; ++k) v(k) = w_hat_fit[k].eval(z);
  return v;
}

Eigen::VectorXcd SolveDetail::first_term(cplx z) const {
  const auto f = F.eval(z);
  Eigen::VectorXcd v(f.size());
  const cplx scale = H3h.eval(z) / F.abs2(z);
  for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = std::conj(f[j]) * scale;
  return v;
}

Eigen::VectorXcd SolveDetail::u_smooth(cplx z) const {
  Eigen::VectorXcd u = first_term(z);
  if (K > 0) u -= q_of_F(F, z) * w_hat(z);
  return u;
}

std::vector<Eigen::VectorXcd> SolveDetail::u_smooth_ring(
    double r, const std::vector<double>& angles) const {
  std::vector<std::vector<cplx>> what_ring(K);
  for (int k = 0; k < K; ++k) what_ring[k] = eval_on_circle(w_hat_fit[k], r, angles);
  std::vector<Eigen::VectorXcd> out(angles.size());
  Eigen::VectorXcd what_v(K);
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const cplx z = std::polar(r, angles[j]);
    out[j] = first_term(z);
    if (K > 0) {
      for (int k = 0; k < K; ++k) what_v(k) = what_ring[k][j];
      out[j] -= q_of_F(F, z) * what_v;
    }
  }
  return out;
}

namespace {

// Least-squares fit of grid samples by a monomial expansion of bidegree
// <= N_fit, one small radial problem per angular frequency.  The fit basis is
// r^|l| P_k(2r^2 - 1) (shifted Legendre), which keeps the normal equations
// well conditioned; the conversion to monomial coefficients runs in
// __float128 because Legendre-to-monomial coefficients grow like 2^k.
QuadExpansion fit_expansion(const std::vector<cplx>& samples, const DiskGrid& g,
                                int N_fit) {
  QuadExpansion out;
  std::vector<cplx> wl(g.n_r);
  for (int l = -N_fit; l <= N_fit; ++l) {
    // angular projection at each radius
    for (int i = 0; i < g.n_r; ++i) {
      cplx acc(0.0);
      for (int j = 0; j < g.n_theta; ++j) {
        acc += samples[static_cast<std::size_t>(i) * g.n_theta + j] *
               std::polar(1.0, -l * g.theta[j]);
      }
      wl[i] = acc / static_cast<double>(g.n_theta);
    }
    const int n_k = N_fit - std::abs(l) + 1;
    Eigen::MatrixXd B(g.n_r, n_k);
    Eigen::VectorXcd rhs(g.n_r);
    for (int i = 0; i < g.n_r; ++i) {
      const double sw = std::sqrt(g.r_weight[i] * g.r[i]);
      rhs(i) = sw * wl[i];
      const double base = sw * std::pow(g.r[i], std::abs(l));
      const double x = 2.0 * g.r[i] * g.r[i] - 1.0;
      double pkm1 = 1.0, pk = x;
      for (int k = 0; k < n_k; ++k) {
        double value;
        if (k == 0) {
          value = 1.0;
        } else if (k == 1) {
          value = x;
        } else {
          value = ((2.0 * k - 1.0) * x * pk - (k - 1.0) * pkm1) / k;
          pkm1 = pk;
          pk = value;
        }
        B(i, k) = base * value;
      }
    }
    Eigen::VectorXd col_scale(n_k);
    for (int k = 0; k < n_k; ++k) {
      col_scale(k) = B.col(k).norm();
      if (col_scale(k) == 0.0) col_scale(k) = 1.0;
      B.col(k) /= col_scale(k);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-13);
    Eigen::VectorXcd coeff(n_k);
    {
      const Eigen::VectorXd cr = svd.solve(rhs.real().eval());
      const Eigen::VectorXd ci = svd.solve(rhs.imag().eval());
      for (int k = 0; k < n_k; ++k) coeff(k) = cplx(cr(k), ci(k)) / col_scale(k);
    }

    // accumulate sum_k coeff_k P_k(2y - 1) as a polynomial in y = r^2;
    // Legendre-to-monomial coefficients grow like 2^k, so stay in quad
    std::vector<qreal> pkm1_c(n_k, 0), pk_c(n_k, 0);
    std::vector<qcplx> mono(n_k, qcplx(0));
    for (int k = 0; k < n_k; ++k) {
      std::vector<qreal> cur(n_k, 0);
      if (k == 0) {
        cur[0] = 1;
      } else if (k == 1) {
        cur[0] = -1;
        cur[1] = 2;
      } else {
        // P_k = ((2k-1)(2y-1) P_{k-1} - (k-1) P_{k-2}) / k
        for (int j = 0; j < n_k; ++j) {
          qreal v = -qreal(2 * k - 1) * pk_c[j] - qreal(k - 1) * pkm1_c[j];
          if (j > 0) v += qreal(2 * (2 * k - 1)) * pk_c[j - 1];
          cur[j] = v / qreal(k);
        }
      }
      const qcplx ck(qreal(coeff(k).real()), qreal(coeff(k).imag()));
      for (int j = 0; j <= k; ++j) mono[j] += ck * cur[j];
      pkm1_c = pk_c;
      pk_c = cur;
    }
    for (int j = 0; j < n_k; ++j) {
      if (mono[j] == qcplx(0)) continue;
      const int p = j + std::max(l, 0);
      const int q = j + std::max(-l, 0);
      out.add(p, q, mono[j]);
    }
  }
  return out;
}

std::vector<AnalyticPoly> recover_coefficients(const SolveDetail& d, int N, double r_rec,
                                               int n_theta) {
  BoundaryGrid circ = make_boundary_grid(n_theta);
  const int n = d.F.size();
  const std::vector<Eigen::VectorXcd> ring = d.u_smooth_ring(r_rec, circ.angles);
  std::vector<std::vector<cplx>> samples(n, std::vector<cplx>(circ.size()));
  for (std::size_t j = 0; j < circ.size(); ++j) {
    for (int c = 0; c < n; ++c) samples[c][j] = ring[j](c);
  }
  std::vector<AnalyticPoly> out(n);
  for (int c = 0; c < n; ++c) {
    const BoundaryFunction f = fourier_coeffs(samples[c], N, circ);
    std::vector<cplx> coeffs(N + 1);
    double rp = 1.0;
    for (int k = 0; k <= N; ++k) {
      coeffs[k] = f.coeff(k) / rp;
      rp *= r_rec;
    }
    out[c] = AnalyticPoly(std::move(coeffs));
  }
  return out;
}

}  // namespace

WolffSolution solve_uh(WolffProblem p, SolveDetail* detail) {
  WolffSolution sol;
  SolveDetail local;
  SolveDetail& d = detail ? *detail : local;

  const ValidationResult val = validate_problem(p);
  if (!val.ok) throw hypothesis_error("solve_uh: " + val.message);
  sol.applied_scale = val.applied_scale;

  const int n = p.F.size();
  d.grid = make_polar_grid(p.params.grid_nr, p.params.grid_ntheta);
  d.bgrid = make_boundary_grid(p.params.grid_ntheta);
  d.F = p.F;
  d.Fp = p.F.derivative();
  d.H = p.H;
  d.h = p.h;
  d.H3h = cube(p.H) * p.h;
  d.K = static_cast<int>(q_num_columns(n));

  const int mh_N = std::max(p.params.N, std::max(p.H.degree(), 0));
  sol.mh_estimate = p.H.is_zero() ? 0.0 : op_norm(mult_matrix(p.H, mh_N));
  sol.K_bound = norm_bound_K(sol.mh_estimate);

  if (d.H3h.is_zero()) {
    sol.u.assign(n, AnalyticPoly());
    sol.norm_ratio = 0.0;
    return sol;
  }

  const int fit_cap = std::min(56, p.params.grid_ntheta / 2 - 1);
  int N_fit = p.params.fit_degree >= 0 ? p.params.fit_degree
                                       : default_fit_degree(p, d.H3h);
  N_fit = std::min(N_fit, fit_cap);

  if (d.K > 0) {
    // exact w on the grid, one K-vector per node
    std::vector<std::vector<cplx>> w_nodes(d.K, std::vector<cplx>(d.grid.size()));
    parallel_for(d.grid.size(), [&](std::size_t i) {
      const Eigen::VectorXcd w = d.w_true(d.grid.nodes[i]);
      for (int k = 0; k < d.K; ++k) w_nodes[k][i] = w(k);
    });
    d.w_fit.resize(d.K);
    // escalate the bidegree until the fit meets the tolerance (the default
    // degree under-resolves problems whose 1/(FF*)^2 decays slowly)
    for (;;) {
      double sup = 0.0, l2 = 0.0;
      for (int k = 0; k < d.K; ++k) {
        d.w_fit[k] = fit_expansion(w_nodes[k], d.grid, N_fit);
        for (int i = 0; i < d.grid.n_r; ++i) {
          const std::vector<cplx> fitted =
              eval_on_circle(d.w_fit[k], d.grid.r[i], d.grid.theta);
          for (int j = 0; j < d.grid.n_theta; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * d.grid.n_theta + j;
            const double diff = std::abs(fitted[j] - w_nodes[k][idx]);
            sup = std::max(sup, diff);
            l2 += d.grid.weights[idx] * diff * diff;
          }
        }
      }
      d.fit_residual_sup = sup;
      d.fit_residual_l2 = std::sqrt(l2);
      sol.fit_residual = sup;
      if (sup <= p.params.tol) break;
      if (p.params.fit_degree >= 0 || N_fit >= fit_cap) {
        std::ostringstream msg;
        msg << "solve_uh: w fit residual " << sup << " exceeds tol " << p.params.tol
            << " at bidegree " << N_fit << "; raise the fit degree or grid sizes";
        throw refinement_error(msg.str());
      }
      N_fit = std::min(N_fit + 8, fit_cap);
    }
    d.w_hat_fit.resize(d.K);
    for (int k = 0; k < d.K; ++k) d.w_hat_fit[k] = cauchy_transform_qx(d.w_fit[k]);
  }

  // coefficient recovery on |z| = r_rec
  int n_rec = p.params.grid_ntheta;
  while (n_rec < 4 * (p.params.N + 1)) n_rec *= 2;
  sol.u = recover_coefficients(d, p.params.N, p.params.r_rec, n_rec);

  // analyticity defect: negative-frequency mass on three circles
  double defect = 0.0;
  for (const double rc : {0.5, 0.7, 0.9}) {
    BoundaryGrid circ = make_boundary_grid(n_rec);
    const int M = n_rec / 2 - 1;
    const std::vector<Eigen::VectorXcd> ring = d.u_smooth_ring(rc, circ.angles);
    std::vector<std::vector<cplx>> samples(n, std::vector<cplx>(circ.size()));
    for (std::size_t j = 0; j < circ.size(); ++j) {
      for (int c = 0; c < n; ++c) samples[c][j] = ring[j](c);
    }
    for (int c = 0; c < n; ++c) {
      const BoundaryFunction f = fourier_coeffs(samples[c], M, circ);
      double mass = 0.0;
      for (int m = 1; m <= M; ++m) mass += std::abs(f.coeff(-m));
      defect = std::max(defect, mass);
    }
  }
  sol.analyticity_defect = defect;

  // residual of F u = H^3 h over the disk and boundary grids
  double residual = 0.0;
  auto check_node = [&](cplx z) {
    cplx fu(0.0);
    for (int c = 0; c < n; ++c) fu += d.F.polys[c].eval(z) * sol.u[c].eval(z);
    residual = std::max(residual, std::abs(fu - d.H3h.eval(z)));
  };
  for (const auto& z : d.grid.nodes) check_node(z);
  for (const auto& z : d.bgrid.nodes) check_node(z);
  sol.residual = residual;

  double unorm_sq = 0.0;
  for (const auto& uc : sol.u) {
    const double nn = dirichlet_norm_coeff(uc);
    unorm_sq += nn * nn;
  }
  const double hnorm = dirichlet_norm_coeff(p.h);
  sol.norm_ratio = hnorm > 0.0 ? std::sqrt(unorm_sq) / hnorm : 0.0;
  return sol;
}

WolffSolution solve_ideal(const MultiplierTuple& F, const AnalyticPoly& H,
                          const SolverParams& params, double delta, SolveDetail* detail) {
  WolffProblem p;
  p.F = F;
  p.H = H;
  p.h = AnalyticPoly::constant(1.0);
  p.delta = delta;
  p.params = params;
  return solve_uh(std::move(p), detail);
}

double norm_bound_K(double mh) {
  if (mh < 0.0) throw std::invalid_argument("norm_bound_K: mh must be >= 0");
  return std::sqrt(144.0 * mh * mh + 73104.0);
}

RadicalResult radical_diagnostic(const MultiplierTuple& F, const AnalyticPoly& H,
                                 int m_max, int grid_nr, int grid_ntheta) {
  if (m_max < 1) throw std::invalid_argument("radical_diagnostic: m_max must be >= 1");
  bool all_zero = true;
  for (const auto& f : F.polys) all_zero = all_zero && f.is_zero();
  if (F.size() == 0 || all_zero) {
    throw hypothesis_error("radical_diagnostic: F is identically zero");
  }

  const auto sup_ratio = [&](int m, int nr, int ntheta) {
    const DiskGrid g = make_polar_grid(nr, ntheta);
    const BoundaryGrid b = make_boundary_grid(ntheta);
    double sup = 0.0;
    auto scan = [&](cplx z) {
      const double ff = F.abs2(z);
      const double hv = std::pow(std::abs(H.eval(z)), m);
      sup = std::max(sup, ff > 0.0 ? hv / ff : std::numeric_limits<double>::infinity());
    };
    for (const auto& z : g.nodes) scan(z);
    for (const auto& z : b.nodes) scan(z);
    return sup;
  };

  RadicalResult res;
  for (int m = 1; m <= m_max; ++m) {
    const double coarse = sup_ratio(m, grid_nr, grid_ntheta);
    const double fine = sup_ratio(m, 2 * grid_nr, 2 * grid_ntheta);
    res.sup_coarse.push_back(coarse);
    res.sup_fine.push_back(fine);
    if (std::isfinite(coarse) && std::isfinite(fine) && fine <= 2.0 * coarse) {
      res.m = m;
      res.C0 = fine;
      return res;
    }
  }
  return res;
}

}  // namespace wolffd
