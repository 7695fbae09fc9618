#pragma once

#include "wolffd/disk_core.hpp"
#include "wolffd/poly.hpp"

namespace wolffd {

/// Canonical Dirichlet norm sqrt(sum (n+1) |a_n|^2).
double dirichlet_norm_coeff(const AnalyticPoly& p);

/// Coefficient inner product <p, q> = sum (n+1) a_n conj(b_n).
cplx dirichlet_inner(const AnalyticPoly& p, const AnalyticPoly& q);

/// Equivalent quadrature norm sqrt( int |p|^2 dsigma + int_D |p'|^2 dA ).
/// Appends a note to *warning when the grids cannot resolve deg(p).
double dirichlet_norm_quad(const AnalyticPoly& p, const BoundaryGrid& bg,
                           const DiskGrid& dg, std::string* warning = nullptr);

/// Harmonic Dirichlet norm sqrt(sum (1+|n|) |f_hat(n)|^2).
double harmonic_dirichlet_norm(const BoundaryFunction& f);

/// Reproducing kernel k_w(z) = sum_{n>=0} (z conj(w))^n / (n+1)
///                           = log(1/(1 - z conj(w))) / (z conj(w)).
cplx rk_eval(cplx w, cplx z);

/// Kernel truncated to degree N, as an element of the space (coefficients in z).
AnalyticPoly rk_poly(cplx w, int N);

/// Coefficients c_1..c_N of 1 - 1/k(x) where k(x) = sum x^n/(n+1); all positive.
std::vector<double> cnp_coeffs(int N);

/// Harmonic extension sum_{n>=0} f_hat(n) z^n + sum_{n<0} f_hat(n) conj(z)^{|n|}.
cplx poisson_extend(const BoundaryFunction& f, cplx z);

}  // namespace wolffd
