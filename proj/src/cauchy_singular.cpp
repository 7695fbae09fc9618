#include "wolffd/cauchy_singular.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "wolffd/multiplier_ops.hpp"

namespace wolffd {

namespace {

cplx ipow(cplx z, int k) {
  cplx acc(1.0);
  for (int i = 0; i < k; ++i) acc *= z;
  return acc;
}

// sum_{k=0}^{K-1} x^k, K >= 0
double geom_partial(double x, int K) {
  double acc = 0.0, xk = 1.0;
  for (int k = 0; k < K; ++k) {
    acc += xk;
    xk *= x;
  }
  return acc;
}

}  // namespace

cplx MonomialExpansion::eval(cplx u) const {
  cplx acc(0.0);
  const cplx ub = std::conj(u);
  for (const auto& [nm, a] : terms) {
    acc += a * ipow(u, nm.first) * ipow(ub, nm.second);
  }
  return acc;
}

cplx RadialProfile::eval(double r) const {
  cplx acc(0.0);
  for (const auto& [p, c] : terms) acc += c * std::pow(r, p);
  return acc;
}

cplx cauchy_transform(const MonomialExpansion& w, cplx z) {
  cplx acc(0.0);
  const cplx zb = std::conj(z);
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    cplx val = ipow(z, n) * ipow(zb, m + 1);
    if (n > m) val -= ipow(z, n - m - 1);
    acc += a * val / (m + 1.0);
  }
  return acc;
}

MonomialExpansion cauchy_transform_expansion(const MonomialExpansion& w) {
  MonomialExpansion out;
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    out.add(n, m + 1, a / (m + 1.0));
    if (n > m) out.add(n - m - 1, 0, -a / (m + 1.0));
  }
  return out;
}

MonomialExpansion beurling_derivative_expansion(const MonomialExpansion& w) {
  MonomialExpansion out;
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    if (n >= 1) out.add(n - 1, m + 1, a * static_cast<double>(n) / (m + 1.0));
    if (n > m && n - m - 1 >= 1) {
      out.add(n - m - 2, 0, -a * static_cast<double>(n - m - 1) / (m + 1.0));
    }
  }
  return out;
}

MonomialExpansion T_expansion(const MonomialExpansion& f) {
  MonomialExpansion out;
  for (const auto& [nm, a] : f.terms) {
    const int n = nm.first, m = nm.second;
    const cplx c = a * kPi / (m + 1.0);
    if (n > m) {
      for (int k = 0; k <= m; ++k) out.add(n - m - 1 + k, k, c);
    } else if (n >= 1) {
      for (int k = 0; k < n; ++k) out.add(k, m - n + 1 + k, c);
    }
  }
  return out;
}

std::vector<cplx> eval_on_circle(const MonomialExpansion& f, double r,
                                 const std::vector<double>& angles) {
  // collapse to per-frequency radial values, then sum the Fourier series
  std::map<int, cplx> freq;
  for (const auto& [nm, a] : f.terms) {
    freq[nm.first - nm.second] += a * std::pow(r, nm.first + nm.second);
  }
  std::vector<cplx> out(angles.size(), cplx(0.0));
  for (const auto& [l, c] : freq) {
    for (std::size_t j = 0; j < angles.size(); ++j) {
      out[j] += c * std::polar(1.0, l * angles[j]);
    }
  }
  return out;
}

cplx beurling_derivative(const MonomialExpansion& w, cplx z) {
  cplx acc(0.0);
  const cplx zb = std::conj(z);
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    cplx val(0.0);
    if (n >= 1) val += static_cast<double>(n) * ipow(z, n - 1) * ipow(zb, m + 1);
    if (n > m && n - m - 1 >= 1) {
      val -= static_cast<double>(n - m - 1) * ipow(z, n - m - 2);
    }
    acc += a * val / (m + 1.0);
  }
  return acc;
}

double dbar_defect(const MonomialExpansion& w, cplx z, double step) {
  if (std::abs(z) + step >= 1.0) {
    throw std::invalid_argument("dbar_defect: |z| + step must be < 1");
  }
  // dbar = (d/dx + i d/dy) / 2 by centered differences
  const cplx fx = (cauchy_transform(w, z + step) - cauchy_transform(w, z - step)) / (2.0 * step);
  const cplx fy = (cauchy_transform(w, z + cplx(0.0, step)) -
                   cauchy_transform(w, z - cplx(0.0, step))) /
                  (2.0 * step);
  const cplx dbar = 0.5 * (fx + cplx(0.0, 1.0) * fy);
  return std::abs(dbar - w.eval(z));
}

cplx T_apply(const MonomialExpansion& f, cplx lam) {
  if (std::abs(lam) >= 1.0) throw std::invalid_argument("T_apply: |lam| must be < 1");
  const double s2 = std::norm(lam);
  const cplx lb = std::conj(lam);
  cplx acc(0.0);
  for (const auto& [nm, a] : f.terms) {
    const int n = nm.first, m = nm.second;
    cplx val(0.0);
    if (n > m) {
      val = ipow(lam, n - m - 1) * geom_partial(s2, m + 1);
    } else if (n >= 1) {
      val = ipow(lb, m - n + 1) * geom_partial(s2, n);
    }
    acc += a * kPi / (m + 1.0) * val;
  }
  return acc;
}

std::vector<RadialProfile> rotation_decompose(const MonomialExpansion& f) {
  std::map<int, RadialProfile> by_l;
  for (const auto& [nm, a] : f.terms) {
    const int l = nm.first - nm.second;
    auto& prof = by_l[l];
    prof.l = l;
    prof.terms.emplace_back(nm.first + nm.second, a);
  }
  std::vector<RadialProfile> out;
  out.reserve(by_l.size());
  for (auto& [l, prof] : by_l) out.push_back(std::move(prof));
  return out;
}

cplx T_l_apply(int l, const RadialProfile& f_l, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("T_l_apply: s must be in (0,1)");
  // Exact integration of the displayed kernels on polynomial profiles.
  cplx acc(0.0);
  if (l == 0) {
    for (const auto& [p, c] : f_l.terms) {
      acc += c * (-std::pow(s, p + 1) / (p + 2.0) +
                  s / (1.0 - s * s) * (1.0 - std::pow(s, p + 2)) / (p + 2.0));
    }
  } else if (l > 0) {
    // (s/r)^{l-1} integrated with plain dr
    for (const auto& [p, c] : f_l.terms) {
      const int q = p + 1 - l;  // r exponent after the kernel
      double integral;          // s^{l-1} int_s^1 r^q dr
      if (q == -1) {
        integral = std::pow(s, l - 1) * std::log(1.0 / s);
      } else {
        integral = (std::pow(s, l - 1) - std::pow(s, p + 1)) / (q + 1.0);
      }
      acc += c * integral / (1.0 - s * s);
    }
  } else {
    const int L = -l;
    const double sum_s2 = geom_partial(s * s, L + 1);
    for (const auto& [p, c] : f_l.terms) {
      const double denom = p + 2.0 + L;
      acc += c * (-sum_s2 * std::pow(s, p + 1) / denom +
                  std::pow(s, 1 + L) * (1.0 - std::pow(s, p + 1 + L + 1)) /
                      ((1.0 - s * s) * denom));
    }
  }
  return acc;
}

double rotation_identity_defect(const MonomialExpansion& f, const DiskGrid& grid) {
  const std::vector<RadialProfile> profiles = rotation_decompose(f);
  double worst = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    const double s = grid.r[i];
    std::vector<cplx> radial(profiles.size());
    for (std::size_t k = 0; k < profiles.size(); ++k) {
      radial[k] = T_l_apply(profiles[k].l, profiles[k], s);
    }
    for (int j = 0; j < grid.n_theta; ++j) {
      const double t = grid.theta[j];
      cplx rhs(0.0);
      for (std::size_t k = 0; k < profiles.size(); ++k) {
        rhs += std::polar(1.0, (profiles[k].l - 1) * t) * radial[k];
      }
      rhs *= 2.0 * kPi;
      const cplx lhs = T_apply(f, grid.nodes[static_cast<std::size_t>(i) * grid.n_theta + j]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double area_norm_sq(const MonomialExpansion& f) {
  // int u^n conj(u)^m conj(u^n') u^m' dA = 2 pi / (n+m+n'+m'+2) when n-m = n'-m'
  double acc = 0.0;
  for (const auto& [nm, a] : f.terms) {
    for (const auto& [nm2, b] : f.terms) {
      if (nm.first - nm.second != nm2.first - nm2.second) continue;
      const int total = nm.first + nm.second + nm2.first + nm2.second;
      acc += std::real(a * std::conj(b)) * 2.0 * kPi / (total + 2.0);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Schur certificates
// ---------------------------------------------------------------------------

namespace {

// P_j(x) = int_0^x t^j / (1-t)^2 dt via R_i(x) = int_0^x t^i/(1-t) dt.
double schur_P(int j, double x) {
  double R = -std::log1p(-x);  // R_0
  double P = x / (1.0 - x);    // P_0
  double xi = 1.0;
  for (int i = 1; i <= j; ++i) {
    P -= R;
    xi *= x;
    R -= xi / i;
  }
  return P;
}

// S_l(a) = int_0^1 tau^{l-1} / (1 - a^2 tau)^2 dtau  (= P_{l-1}(a^2) / a^{2l})
double schur_S(int l, double a, const std::vector<double>& gl_x,
               const std::vector<double>& gl_w) {
  if (a >= 0.9) return schur_P(l - 1, a * a) / std::pow(a, 2 * l);
  double acc = 0.0;
  for (std::size_t i = 0; i < gl_x.size(); ++i) {
    const double tau = gl_x[i];
    const double d = 1.0 - a * a * tau;
    acc += gl_w[i] * std::pow(tau, l - 1) / (d * d);
  }
  return acc;
}

struct SchurKernel {
  int l;
  SchurWeight weight;
  std::vector<double> gl_x, gl_w;  // Gauss-Legendre on [0,1] for inner integrals

  double operator()(double u, double v) const {
    const double a = std::min(u, v);
    const double b = std::max(u, v);
    if (l == 0) {
      if (weight == SchurWeight::one) return std::log(1.0 / b);
      return 0.5 / (1.0 - a * a);
    }
    if (l > 0) {
      return 0.5 * std::pow(a / b, l) * schur_S(l, a, gl_x, gl_w);
    }
    const int L = -l;
    if (weight == SchurWeight::one) {
      // (ab)^L int_b^1 (sum_{n=0}^L s^{2n})^2 s^{-2L-1} ds, expanded per power
      double acc = 0.0;
      for (int k = 0; k <= 2 * L; ++k) {
        const double cnt = (k <= L) ? (k + 1) : (2 * L + 1 - k);
        if (k < L) {
          const int d = L - k;
          acc += cnt * (std::pow(a / b, d) * std::pow(a * b, k) - std::pow(a * b, L)) /
                 (2.0 * d);
        } else if (k == L) {
          acc += cnt * std::pow(a * b, L) * std::log(1.0 / b);
        } else {
          const int d = k - L;
          acc += cnt * std::pow(a * b, L) * (1.0 - std::pow(b, 2 * d)) / (2.0 * d);
        }
      }
      return acc;
    }
    return std::pow(a * b, L) * 0.5 * schur_P(1 + L, a * a);
  }
};

// Composite Gauss-Legendre on [lo, hi] with segments refined toward hi
// (the kernels can blow up like 1/(1-u^2) just beyond hi).
template <typename F>
double integrate_graded_toward_end(const F& f, double lo, double hi,
                                   const std::vector<double>& gx,
                                   const std::vector<double>& gw) {
  double acc = 0.0;
  double left = lo;
  const double pole_gap = std::max(1.0 - hi, 1e-12);
  for (int seg = 0; seg < 60; ++seg) {
    const double remaining = hi - left;
    const bool last = remaining <= 2.0 * pole_gap || seg == 59;
    const double right = last ? hi : hi - remaining / 2.0;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double u = left + (right - left) * gx[i];
      acc += (right - left) * gw[i] * f(u);
    }
    if (last) break;
    left = right;
  }
  return acc;
}

}  // namespace

double schur_certificate(int l, SchurWeight weight, int n_v) {
  if (n_v < 8) throw std::invalid_argument("schur_certificate: n_v too small");
  SchurKernel kernel{l, weight, {}, {}};
  gauss_legendre(64, 0.0, 1.0, kernel.gl_x, kernel.gl_w);
  std::vector<double> gx, gw;
  gauss_legendre(24, 0.0, 1.0, gx, gw);
  std::vector<double> gx96, gw96;
  gauss_legendre(96, 0.0, 1.0, gx96, gw96);

  // v samples: Gauss-Legendre spread plus a geometric cluster toward 1.
  std::vector<double> vs, vw_unused;
  gauss_legendre(n_v, 0.0, 1.0, vs, vw_unused);
  for (int k = 2; k <= 20; ++k) vs.push_back(1.0 - std::pow(2.0, -k));
  const double v_cap = 1.0 - 1e-6;

  double sup = 0.0;
  for (double v : vs) {
    v = std::min(v, v_cap);
    double inner = 0.0;
    if (weight == SchurWeight::one) {
      inner += integrate_graded_toward_end(
          [&](double u) { return kernel(u, v) * u; }, 0.0, v, gx, gw);
      for (std::size_t i = 0; i < gx96.size(); ++i) {
        const double u = v + (1.0 - v) * gx96[i];
        inner += (1.0 - v) * gw96[i] * kernel(u, v) * u;
      }
      sup = std::max(sup, inner);
    } else {
      inner += integrate_graded_toward_end(
          [&](double u) { return kernel(u, v) * u / std::sqrt(1.0 - u * u); }, 0.0, v,
          gx, gw);
      // u = sin(psi) absorbs the 1/sqrt(1-u^2) endpoint singularity
      const double psi_lo = std::asin(v);
      for (std::size_t i = 0; i < gx96.size(); ++i) {
        const double psi = psi_lo + (kPi / 2.0 - psi_lo) * gx96[i];
        inner += (kPi / 2.0 - psi_lo) * gw96[i] * kernel(std::sin(psi), v) * std::sin(psi);
      }
      sup = std::max(sup, std::sqrt(1.0 - v * v) * inner);
    }
  }
  return sup;
}

double schur_norm_sq_bound(int l, int n_v) {
  if (l > 0) return schur_certificate(l, SchurWeight::inv_sqrt, n_v);
  // two squared terms, each costing a factor 2
  return 2.0 * schur_certificate(l, SchurWeight::one, n_v) +
         2.0 * schur_certificate(l, SchurWeight::inv_sqrt, n_v);
}

double T_l_norm_estimate(int l, int n_grid) {
  if (n_grid < 64) throw std::invalid_argument("T_l_norm_estimate: need n_grid >= 64");
  std::vector<double> r, w;
  gauss_legendre(n_grid, 0.0, 1.0, r, w);
  Eigen::MatrixXcd M(n_grid, n_grid);
  for (int i = 0; i < n_grid; ++i) {
    const double s = r[i];
    const double si = std::sqrt(w[i] * r[i]);
    for (int j = 0; j < n_grid; ++j) {
      const double rr = r[j];
      double kappa = 0.0;
      if (l == 0) {
        kappa = (rr < s) ? -1.0 / s : s / (1.0 - s * s);
      } else if (l > 0) {
        kappa = (rr > s) ? std::pow(s / rr, l - 1) / ((1.0 - s * s) * rr) : 0.0;
      } else {
        const int L = -l;
        if (rr < s) {
          kappa = -geom_partial(s * s, L + 1) * std::pow(rr / s, 1 + L) / rr;
        } else {
          kappa = std::pow(rr * s, 1 + L) / ((1.0 - s * s) * rr);
        }
      }
      M(i, j) = kappa * si * std::sqrt(w[j] * r[j]);
    }
  }
  return op_norm(M, 1e-9);
}

}  // namespace wolffd
