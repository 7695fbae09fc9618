#pragma once

#include <vector>

#include "wolffd/common.hpp"
#include "wolffd/poly.hpp"

namespace wolffd {

/// Gauss-Legendre nodes and weights for integration over [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Tensor-product quadrature grid for the area measure dA on the unit disk.
///
/// Radial nodes are Gauss-Legendre on (0,1) with the Jacobian r folded into
/// the node weights; angles are equispaced on [-pi, pi).  Node (i, j) sits at
/// r[i] * exp(i theta[j]) and is stored at index i * n_theta + j.  Weights sum
/// to pi.  No node touches r = 0 or r = 1, so kernels singular at the origin
/// or the boundary are finite on the grid.
struct DiskGrid {
  int n_r = 0;
  int n_theta = 0;
  std::vector<double> r;         // radial nodes, size n_r
  std::vector<double> r_weight;  // plain Gauss-Legendre dr weights, size n_r
  std::vector<double> theta;     // size n_theta
  std::vector<cplx> nodes;       // size n_r * n_theta
  std::vector<double> weights;   // dA weights, size n_r * n_theta

  std::size_t size() const { return nodes.size(); }
};

/// Equispaced nodes on the circle for the normalized measure
/// d\sigma = dt / (2 pi); integrating the constant 1 gives exactly 1.
struct BoundaryGrid {
  int n_theta = 0;
  std::vector<double> angles;  // in [-pi, pi)
  std::vector<cplx> nodes;     // e^{i angle}

  double weight() const { return 1.0 / n_theta; }
  std::size_t size() const { return nodes.size(); }
};

/// Two-sided Fourier data f_hat(n), n in [-M, M].
struct BoundaryFunction {
  int M = 0;
  std::vector<cplx> c;  // size 2M+1, index n + M

  BoundaryFunction() = default;
  explicit BoundaryFunction(int band) : M(band), c(2 * band + 1, cplx(0.0)) {}
  cplx coeff(int n) const { return (std::abs(n) <= M) ? c[n + M] : cplx(0.0); }
  cplx& at(int n) { return c[n + M]; }
  /// Value sum_n f_hat(n) e^{i n t}.
  cplx eval(double t) const;
};

DiskGrid make_polar_grid(int n_r, int n_theta);
BoundaryGrid make_boundary_grid(int n_theta);

/// Weighted quadrature sum over the disk grid, accumulated in node order.
cplx integrate_disk(const std::vector<cplx>& samples, const DiskGrid& grid);
/// Mean of the samples (normalized arc length).
cplx integrate_boundary(const std::vector<cplx>& samples, const BoundaryGrid& grid);

/// DFT of boundary samples: f_hat(n) = (1/n_theta) sum_j samples_j e^{-i n theta_j}.
BoundaryFunction fourier_coeffs(const std::vector<cplx>& samples, int M,
                                const BoundaryGrid& grid);

/// The disk automorphism beta(z) = (a - z) / (1 - conj(a) z); an involution.
cplx mobius(cplx a, cplx z);

/// Taylor coefficients of p(beta(z)) through degree N_out, recovered from
/// circle samples.  Accurate once N_out exceeds the (geometric) coefficient
/// decay scale 1 / log(1/|a|).
AnalyticPoly compose_poly_mobius(const AnalyticPoly& p, cplx a, int N_out);

}  // namespace wolffd
