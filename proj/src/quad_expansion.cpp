#include "wolffd/quad_expansion.hpp"

#include <algorithm>
#include <cmath>

namespace wolffd {

namespace {

qreal qpow(qreal x, int k) {
  qreal acc = 1;
  for (int i = 0; i < k; ++i) acc *= x;
  return acc;
}

}  // namespace

void QuadExpansion::add(int n, int m, qcplx a) {
  if (a == qcplx(0)) return;
  terms[{n, m}] += a;
}

int QuadExpansion::band() const {
  int b = 0;
  for (const auto& [nm, a] : terms) b = std::max(b, std::abs(nm.first - nm.second));
  return b;
}

MonomialExpansion QuadExpansion::to_double() const {
  MonomialExpansion out;
  for (const auto& [nm, a] : terms) {
    out.add(nm.first, nm.second,
            cplx(static_cast<double>(a.real()), static_cast<double>(a.imag())));
  }
  return out;
}

cplx QuadExpansion::eval(cplx z) const {
  // collapse by frequency so the cancellation happens radially in quad
  const double r = std::abs(z);
  std::map<int, qcplx> freq;
  for (const auto& [nm, a] : terms) {
    freq[nm.first - nm.second] += a * qpow(qreal(r), nm.first + nm.second);
  }
  const double t = std::arg(z);
  cplx acc(0.0);
  for (const auto& [l, c] : freq) {
    const cplx cd(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    acc += cd * std::polar(1.0, l * t);
  }
  return acc;
}

QuadExpansion cauchy_transform_qx(const QuadExpansion& w) {
  QuadExpansion out;
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    out.add(n, m + 1, a / qreal(m + 1));
    if (n > m) out.add(n - m - 1, 0, -a / qreal(m + 1));
  }
  return out;
}

QuadExpansion beurling_derivative_qx(const QuadExpansion& w) {
  QuadExpansion out;
  for (const auto& [nm, a] : w.terms) {
    const int n = nm.first, m = nm.second;
    if (n >= 1) out.add(n - 1, m + 1, a * qreal(n) / qreal(m + 1));
    if (n > m && n - m - 1 >= 1) {
      out.add(n - m - 2, 0, -a * qreal(n - m - 1) / qreal(m + 1));
    }
  }
  return out;
}

QuadExpansion T_qx(const QuadExpansion& f) {
  QuadExpansion out;
  const qreal qpi = qreal(kPi);
  for (const auto& [nm, a] : f.terms) {
    const int n = nm.first, m = nm.second;
    const qcplx c = a * qpi / qreal(m + 1);
    if (n > m) {
      for (int k = 0; k <= m; ++k) out.add(n - m - 1 + k, k, c);
    } else if (n >= 1) {
      for (int k = 0; k < n; ++k) out.add(k, m - n + 1 + k, c);
    }
  }
  return out;
}

std::vector<cplx> eval_on_circle(const QuadExpansion& f, double r,
                                 const std::vector<double>& angles) {
  std::map<int, qcplx> freq;
  for (const auto& [nm, a] : f.terms) {
    freq[nm.first - nm.second] += a * qpow(qreal(r), nm.first + nm.second);
  }
  std::vector<cplx> out(angles.size(), cplx(0.0));
  for (const auto& [l, c] : freq) {
    const cplx cd(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    for (std::size_t j = 0; j < angles.size(); ++j) {
      out[j] += cd * std::polar(1.0, l * angles[j]);
    }
  }
  return out;
}

std::vector<cplx> eval_on_grid(const QuadExpansion& f, const DiskGrid& g) {
  std::vector<cplx> out(g.size());
  for (int i = 0; i < g.n_r; ++i) {
    const std::vector<cplx> ring = eval_on_circle(f, g.r[i], g.theta);
    std::copy(ring.begin(), ring.end(),
              out.begin() + static_cast<std::size_t>(i) * g.n_theta);
  }
  return out;
}

double area_norm_sq(const QuadExpansion& f) {
  // group by frequency: int z^p conj(z)^q conj(z^p') z^{q'} dA couples only
  // equal frequencies; within one frequency accumulate in quad
  std::map<int, std::vector<std::pair<int, qcplx>>> by_freq;
  for (const auto& [nm, a] : f.terms) {
    by_freq[nm.first - nm.second].emplace_back(nm.first + nm.second, a);
  }
  qreal acc = 0;
  for (const auto& [l, items] : by_freq) {
    for (const auto& [d1, a] : items) {
      for (const auto& [d2, b] : items) {
        const qcplx prod = a * std::conj(b);
        acc += prod.real() * qreal(2.0 * kPi) / qreal(d1 + d2 + 2);
      }
    }
  }
  return static_cast<double>(acc);
}

}  // namespace wolffd
