#include "wolffd/disk_core.hpp"

#include <cmath>

namespace wolffd {

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double eps = 1e-15;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > eps);
    nodes[i - 1] = xm - xl * z;
    nodes[n - i] = xm + xl * z;
    weights[i - 1] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    weights[n - i] = weights[i - 1];
  }
}

cplx BoundaryFunction::eval(double t) const {
  cplx acc(0.0);
  for (int n = -M; n <= M; ++n) {
    acc += coeff(n) * std::polar(1.0, n * t);
  }
  return acc;
}

DiskGrid make_polar_grid(int n_r, int n_theta) {
  if (n_r < 2 || n_theta < 4) {
    throw std::invalid_argument("make_polar_grid: need n_r >= 2 and n_theta >= 4");
  }
  DiskGrid g;
  g.n_r = n_r;
  g.n_theta = n_theta;
  gauss_legendre(n_r, 0.0, 1.0, g.r, g.r_weight);
  g.theta.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    g.theta[j] = -kPi + 2.0 * kPi * j / n_theta;
  }
  g.nodes.resize(static_cast<std::size_t>(n_r) * n_theta);
  g.weights.resize(g.nodes.size());
  const double dtheta = 2.0 * kPi / n_theta;
  for (int i = 0; i < n_r; ++i) {
    const double w = g.r_weight[i] * g.r[i] * dtheta;  // dA = r dr dtheta
    for (int j = 0; j < n_theta; ++j) {
      g.nodes[static_cast<std::size_t>(i) * n_theta + j] = std::polar(g.r[i], g.theta[j]);
      g.weights[static_cast<std::size_t>(i) * n_theta + j] = w;
    }
  }
  return g;
}

BoundaryGrid make_boundary_grid(int n_theta) {
  if (n_theta < 4) throw std::invalid_argument("make_boundary_grid: need n_theta >= 4");
  BoundaryGrid g;
  g.n_theta = n_theta;
  g.angles.resize(n_theta);
  g.nodes.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    g.angles[j] = -kPi + 2.0 * kPi * j / n_theta;
    g.nodes[j] = std::polar(1.0, g.angles[j]);
  }
  return g;
}

cplx integrate_disk(const std::vector<cplx>& samples, const DiskGrid& grid) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("integrate_disk: sample count does not match grid");
  }
  cplx acc(0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    acc += grid.weights[i] * samples[i];
  }
  return acc;
}

cplx integrate_boundary(const std::vector<cplx>& samples, const BoundaryGrid& grid) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("integrate_boundary: sample count does not match grid");
  }
  cplx acc(0.0);
  for (const auto& s : samples) acc += s;
  return acc * grid.weight();
}

BoundaryFunction fourier_coeffs(const std::vector<cplx>& samples, int M,
                                const BoundaryGrid& grid) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("fourier_coeffs: sample count does not match grid");
  }
  if (2 * M + 1 > grid.n_theta) {
    throw std::invalid_argument("fourier_coeffs: band 2M+1 exceeds grid resolution");
  }
  BoundaryFunction f(M);
  for (int n = -M; n <= M; ++n) {
    cplx acc(0.0);
    for (int j = 0; j < grid.n_theta; ++j) {
      acc += samples[j] * std::polar(1.0, -n * grid.angles[j]);
    }
    f.at(n) = acc / static_cast<double>(grid.n_theta);
  }
  return f;
}

cplx mobius(cplx a, cplx z) {
  if (std::abs(a) >= 1.0) throw std::invalid_argument("mobius: |a| must be < 1");
  return (a - z) / (1.0 - std::conj(a) * z);
}

AnalyticPoly compose_poly_mobius(const AnalyticPoly& p, cplx a, int N_out) {
  if (std::abs(a) >= 1.0) {
    throw std::invalid_argument("compose_poly_mobius: |a| must be < 1");
  }
  if (N_out < 0) throw std::invalid_argument("compose_poly_mobius: N_out must be >= 0");
  // Sample on the unit circle and read off the Taylor coefficients; p(beta(z))
  // is analytic on a disk of radius 1/|a| > 1, so negative frequencies vanish
  // and aliasing decays like |a|^n_theta.
  int n_theta = 2048;
  while (n_theta < 4 * (N_out + 1)) n_theta *= 2;
  BoundaryGrid bg = make_boundary_grid(n_theta);
  std::vector<cplx> samples(bg.size());
  for (std::size_t j = 0; j < bg.size(); ++j) {
    samples[j] = p.eval(mobius(a, bg.nodes[j]));
  }
  BoundaryFunction f = fourier_coeffs(samples, N_out, bg);
  std::vector<cplx> coeffs(N_out + 1);
  for (int n = 0; n <= N_out; ++n) coeffs[n] = f.coeff(n);
  return AnalyticPoly(std::move(coeffs));
}

}  // namespace wolffd
