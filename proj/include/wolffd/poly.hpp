#pragma once

#include <vector>

#include "wolffd/common.hpp"

namespace wolffd {

/// Analytic polynomial a0 + a1 z + ... + aN z^N on the closed unit disk.
struct AnalyticPoly {
  std::vector<cplx> coeffs;

  AnalyticPoly() = default;
  explicit AnalyticPoly(std::vector<cplx> c) : coeffs(std::move(c)) {}
  static AnalyticPoly constant(cplx c) { return AnalyticPoly({c}); }
  /// The monomial c * z^n.
  static AnalyticPoly monomial(int n, cplx c = 1.0);

  /// Largest index with a nonzero stored coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  /// Horner evaluation from the top coefficient down (fixed order).
  cplx eval(cplx z) const;

  AnalyticPoly derivative() const;
  AnalyticPoly operator*(const AnalyticPoly& rhs) const;
  AnalyticPoly operator*(cplx s) const;
  AnalyticPoly operator+(const AnalyticPoly& rhs) const;
  cplx coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : cplx(0.0);
  }
};

inline AnalyticPoly cube(const AnalyticPoly& p) { return p * p * p; }

/// Ordered tuple F = (f1, ..., fn) of analytic polynomials.
struct MultiplierTuple {
  std::vector<AnalyticPoly> polys;

  MultiplierTuple() = default;
  explicit MultiplierTuple(std::vector<AnalyticPoly> p) : polys(std::move(p)) {}

  int size() const { return static_cast<int>(polys.size()); }
  int max_degree() const;

  /// F(z) as a vector of component values.
  std::vector<cplx> eval(cplx z) const;
  /// F(z) F(z)^* = sum_j |f_j(z)|^2.
  double abs2(cplx z) const;
  MultiplierTuple derivative() const;
  MultiplierTuple scaled(double s) const;
};

}  // namespace wolffd
