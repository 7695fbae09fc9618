#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "wolffd/cauchy_singular.hpp"
#include "wolffd/disk_core.hpp"

namespace wolffd {

using qreal = __float128;
using qcplx = std::complex<qreal>;

/// Monomial expansion with __float128 coefficients.  Near-best polynomial
/// approximations of functions whose analytic continuation has singularities
/// inside the disk carry monomial coefficients up to ~1e18 that cancel to
/// O(1) values; double storage would leave O(100) absolute noise.  All
/// cancellation-prone accumulation happens in quad; synthesized values are
/// returned as double.
struct QuadExpansion {
  std::map<std::pair<int, int>, qcplx> terms;

  void add(int n, int m, qcplx a);
  cplx eval(cplx z) const;
  bool empty() const { return terms.empty(); }
  int band() const;  // max |n - m|
  /// Lossy double view (for small, well-conditioned expansions only).
  MonomialExpansion to_double() const;
};

QuadExpansion cauchy_transform_qx(const QuadExpansion& w);
QuadExpansion beurling_derivative_qx(const QuadExpansion& w);
QuadExpansion T_qx(const QuadExpansion& f);

/// Values on the circle |z| = r: the radial collapse per angular frequency
/// runs in quad, the Fourier synthesis in double.
std::vector<cplx> eval_on_circle(const QuadExpansion& f, double r,
                                 const std::vector<double>& angles);
/// Values at every node of the grid, ring by ring.
std::vector<cplx> eval_on_grid(const QuadExpansion& f, const DiskGrid& g);

/// Exact int_D |f|^2 dA from the coefficients (quad accumulation).
double area_norm_sq(const QuadExpansion& f);

}  // namespace wolffd
