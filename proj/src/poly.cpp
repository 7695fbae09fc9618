#include "wolffd/poly.hpp"

namespace wolffd {

AnalyticPoly AnalyticPoly::monomial(int n, cplx c) {
  std::vector<cplx> coeffs(n + 1, cplx(0.0));
  coeffs[n] = c;
  return AnalyticPoly(std::move(coeffs));
}

int AnalyticPoly::degree() const {
  for (int n = static_cast<int>(coeffs.size()) - 1; n >= 0; --n) {
    if (coeffs[n] != cplx(0.0)) return n;
  }
  return -1;
}

cplx AnalyticPoly::eval(cplx z) const {
  cplx acc(0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * z + coeffs[k];
  }
  return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
  if (coeffs.size() <= 1) return AnalyticPoly();
  std::vector<cplx> d(coeffs.size() - 1);
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    d[n - 1] = static_cast<double>(n) * coeffs[n];
  }
  return AnalyticPoly(std::move(d));
}

AnalyticPoly AnalyticPoly::operator*(const AnalyticPoly& rhs) const {
  if (coeffs.empty() || rhs.coeffs.empty()) return AnalyticPoly();
  std::vector<cplx> prod(coeffs.size() + rhs.coeffs.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs.size(); ++j) {
      prod[i + j] += coeffs[i] * rhs.coeffs[j];
    }
  }
  return AnalyticPoly(std::move(prod));
}

AnalyticPoly AnalyticPoly::operator*(cplx s) const {
  AnalyticPoly out = *this;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

AnalyticPoly AnalyticPoly::operator+(const AnalyticPoly& rhs) const {
  AnalyticPoly out;
  out.coeffs.resize(std::max(coeffs.size(), rhs.coeffs.size()), cplx(0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
  return out;
}

int MultiplierTuple::max_degree() const {
  int d = -1;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

std::vector<cplx> MultiplierTuple::eval(cplx z) const {
  std::vector<cplx> v(polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j) v[j] = polys[j].eval(z);
  return v;
}

double MultiplierTuple::abs2(cplx z) const {
  double s = 0.0;
  for (const auto& p : polys) s += std::norm(p.eval(z));
  return s;
}

MultiplierTuple MultiplierTuple::derivative() const {
  MultiplierTuple d;
  d.polys.reserve(polys.size());
  for (const auto& p : polys) d.polys.push_back(p.derivative());
  return d;
}

MultiplierTuple MultiplierTuple::scaled(double s) const {
  MultiplierTuple out;
  out.polys.reserve(polys.size());
  for (const auto& p : polys) out.polys.push_back(p * cplx(s));
  return out;
}

}  // namespace wolffd
