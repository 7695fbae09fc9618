#include "wolffd/dirichlet_space.hpp"

#include <cmath>

namespace wolffd {

double dirichlet_norm_coeff(const AnalyticPoly& p) {
  double s = 0.0;
  for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
    s += (n + 1.0) * std::norm(p.coeffs[n]);
  }
  return std::sqrt(s);
}

cplx dirichlet_inner(const AnalyticPoly& p, const AnalyticPoly& q) {
  cplx s(0.0);
  const std::size_t m = std::min(p.coeffs.size(), q.coeffs.size());
  for (std::size_t n = 0; n < m; ++n) {
    s += (n + 1.0) * p.coeffs[n] * std::conj(q.coeffs[n]);
  }
  return s;
}

double dirichlet_norm_quad(const AnalyticPoly& p, const BoundaryGrid& bg,
                           const DiskGrid& dg, std::string* warning) {
  const int d = p.degree();
  if (warning != nullptr && d >= 0) {
    // Boundary quadrature of |p|^2 aliases beyond n_theta/2; the disk rule is
    // exact for radial degree <= 2 n_r - 2.
    if (bg.n_theta <= 2 * d || dg.n_theta <= 2 * d || dg.n_r <= d) {
      *warning += "dirichlet_norm_quad: grid under-resolves degree " + std::to_string(d) + "; ";
    }
  }
  std::vector<cplx> bsamp(bg.size());
  for (std::size_t j = 0; j < bg.size(); ++j) {
    bsamp[j] = std::norm(p.eval(bg.nodes[j]));
  }
  const double boundary = integrate_boundary(bsamp, bg).real();
  const AnalyticPoly dp = p.derivative();
  std::vector<cplx> dsamp(dg.size());
  for (std::size_t i = 0; i < dg.size(); ++i) {
    dsamp[i] = std::norm(dp.eval(dg.nodes[i]));
  }
  const double area = integrate_disk(dsamp, dg).real();
  return std::sqrt(boundary + area);
}

double harmonic_dirichlet_norm(const BoundaryFunction& f) {
  double s = 0.0;
  for (int n = -f.M; n <= f.M; ++n) {
    s += (1.0 + std::abs(n)) * std::norm(f.coeff(n));
  }
  return std::sqrt(s);
}

cplx rk_eval(cplx w, cplx z) {
  if (std::abs(w) >= 1.0 || std::abs(z) >= 1.0) {
    throw std::invalid_argument("rk_eval: arguments must lie in the open disk");
  }
  const cplx x = z * std::conj(w);
  if (std::abs(x) < 1e-2) {
    // series around the removable singularity at x = 0
    cplx acc(0.0);
    cplx xn(1.0);
    for (int n = 0; n <= 12; ++n) {
      acc += xn / (n + 1.0);
      xn *= x;
    }
    return acc;
  }
  return -std::log(1.0 - x) / x;
}

AnalyticPoly rk_poly(cplx w, int N) {
  std::vector<cplx> coeffs(N + 1);
  cplx wbar_n(1.0);
  for (int n = 0; n <= N; ++n) {
    coeffs[n] = wbar_n / (n + 1.0);
    wbar_n *= std::conj(w);
  }
  return AnalyticPoly(std::move(coeffs));
}

std::vector<double> cnp_coeffs(int N) {
  if (N < 1) throw std::invalid_argument("cnp_coeffs: N must be >= 1");
  // Reciprocal power series of k(x) = sum x^n/(n+1) by Cauchy-product
  // inversion: b_0 = 1, b_n = -sum_{j=1..n} k_j b_{n-j}; then c_n = -b_n.
  std::vector<double> b(N + 1, 0.0);
  b[0] = 1.0;
  for (int n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
      acc += b[n - j] / (j + 1.0);
    }
    b[n] = -acc;
  }
  std::vector<double> c(N);
  for (int n = 1; n <= N; ++n) c[n - 1] = -b[n];
  return c;
}

cplx poisson_extend(const BoundaryFunction& f, cplx z) {
  if (std::abs(z) >= 1.0) {
    throw std::invalid_argument("poisson_extend: |z| must be < 1");
  }
  cplx acc = f.coeff(0);
  cplx zn(1.0), zbn(1.0);
  for (int n = 1; n <= f.M; ++n) {
    zn *= z;
    zbn *= std::conj(z);
    acc += f.coeff(n) * zn + f.coeff(-n) * zbn;
  }
  return acc;
}

}  // namespace wolffd
