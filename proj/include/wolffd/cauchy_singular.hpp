#pragma once

#include <map>
#include <utility>

#include "wolffd/disk_core.hpp"

namespace wolffd {

/// Finite expansion w(u) = sum a_{nm} u^n conj(u)^m, n, m >= 0.
struct MonomialExpansion {
  std::map<std::pair<int, int>, cplx> terms;

  void add(int n, int m, cplx a) {
    if (a != cplx(0.0)) terms[{n, m}] += a;
  }
  cplx eval(cplx u) const;
  bool empty() const { return terms.empty(); }
};

/// Radial profile f_l(r) = sum_k c_k r^{p_k} of the angular frequency l.
struct RadialProfile {
  int l = 0;
  std::vector<std::pair<int, cplx>> terms;  // (power, coefficient)

  cplx eval(double r) const;
};

/// Cauchy transform hat{w}(z) = -(1/pi) int_D w(u)/(u - z) dA(u), evaluated
/// through the closed monomial form
///   u^n conj(u)^m  ->  ( z^n conj(z)^{m+1} - [n > m] z^{n-m-1} ) / (m+1),
/// valid on the closed disk.
cplx cauchy_transform(const MonomialExpansion& w, cplx z);

/// The same closed forms as expansions in (z, conj z), for bulk evaluation.
MonomialExpansion cauchy_transform_expansion(const MonomialExpansion& w);
MonomialExpansion beurling_derivative_expansion(const MonomialExpansion& w);
MonomialExpansion T_expansion(const MonomialExpansion& f);

/// Values on the circle |z| = r at the given angles (O(terms + angles * band)).
std::vector<cplx> eval_on_circle(const MonomialExpansion& f, double r,
                                 const std::vector<double>& angles);

/// d/dz of the Cauchy transform (Beurling-type derivative), from the
/// differentiated closed form; principal values never enter.
cplx beurling_derivative(const MonomialExpansion& w, cplx z);

/// |dbar of cauchy_transform at z (centered differences, given step) - w(z)|.
double dbar_defect(const MonomialExpansion& w, cplx z, double step);

/// (T w)(lam) = int_D w(z) / ((z - lam)(1 - z conj(lam))) dA(z) through the
/// per-monomial series closed form.
cplx T_apply(const MonomialExpansion& f, cplx lam);

/// Angular decomposition f(r e^{i theta}) = sum_l f_l(r) e^{i l theta} with
/// f_l(r) = sum_k a_{l+k,k} r^{l+2k}.  Parseval: ||f||_A^2 = 2 pi sum_l ||f_l||^2
/// in L^2([0,1], r dr).
std::vector<RadialProfile> rotation_decompose(const MonomialExpansion& f);

/// The radial operator family of the method of rotations:
///   l = 0 : -int_0^s (r/s) f dr + s/(1-s^2) int_s^1 f r dr
///   l > 0 : 1/(1-s^2) int_s^1 (s/r)^{l-1} f dr
///   l < 0 : -(sum_{n=0}^{-l} s^{2n}) int_0^s (r/s)^{1-l} f dr
///           + 1/(1-s^2) int_s^1 (r s)^{1-l} f dr
/// evaluated exactly on polynomial profiles.
cplx T_l_apply(int l, const RadialProfile& f_l, double s);

/// max over grid nodes s e^{it} of
/// | T_apply(f) - 2 pi sum_l e^{i(l-1)t} (T_l f_l)(s) |.
double rotation_identity_defect(const MonomialExpansion& f, const DiskGrid& grid);

/// ||f||_A^2 = int_D |f|^2 dA for a monomial expansion (exact coefficient sum).
double area_norm_sq(const MonomialExpansion& f);

enum class SchurWeight { one, inv_sqrt };

/// Schur bound sup_v (1/p(v)) int_0^1 K(u, v) p(u) u du for the symmetrized
/// positive kernel of T_l selected by (l, weight):
///   l = 0, one      : ln(1 / max{u,v})
///   l = 0, inv_sqrt : (1/2) / (1 - min{u,v}^2)
///   l > 0, inv_sqrt : (uv)^{-l} int_0^{min} s^{2l-1}/(1-s^2)^2 ds
///   l < 0, one      : (uv)^{|l|} int_{max}^1 (sum_{n=0}^{|l|} s^{2n})^2 s^{-2|l|-1} ds
///   l < 0, inv_sqrt : (uv)^{|l|} int_0^{min} s^{3+2|l|}/(1-s^2)^2 ds
/// with p = 1 or p = 1/sqrt(1-u^2).  The sup is taken over n_v sample points.
double schur_certificate(int l, SchurWeight weight, int n_v = 256);

/// Schur bound for ||T_l||^2: combines the per-kernel certificates exactly the
/// way the squared-sum splits do (factor 2 per split term).
double schur_norm_sq_bound(int l, int n_v = 256);

/// Largest singular value of the Nystrom discretization of T_l on
/// L^2([0,1], r dr) with n_grid Gauss-Legendre nodes.
double T_l_norm_estimate(int l, int n_grid);

}  // namespace wolffd
