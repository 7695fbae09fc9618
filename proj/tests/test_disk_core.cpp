#include <cmath>
#include <random>

#include "doctest.h"
#include "wolffd/disk_core.hpp"

using namespace wolffd;

TEST_SUITE_BEGIN("disk_core");

TEST_CASE("polar grid basics") {
  const DiskGrid g = make_polar_grid(2, 4);
  CHECK(g.size() == 8);
  double wsum = 0.0;
  for (double w : g.weights) {
    CHECK(w > 0.0);
    wsum += w;
  }
  CHECK(std::abs(wsum - kPi) <= 1e-10 * kPi);
  for (const auto& z : g.nodes) {
    CHECK(std::abs(z) > 0.0);
    CHECK(std::abs(z) < 1.0);
  }
  CHECK_THROWS_AS(make_polar_grid(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_polar_grid(4, 2), std::invalid_argument);
}

TEST_CASE("disk integration examples") {
  const DiskGrid g = make_polar_grid(32, 64);
  std::vector<cplx> ones(g.size(), 1.0);
  CHECK(std::abs(integrate_disk(ones, g) - kPi) <= 1e-10);

  std::vector<cplx> zs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) zs[i] = g.nodes[i];
  CHECK(std::abs(integrate_disk(zs, g)) <= 1e-10);

  std::vector<cplx> r2(g.size()), r4(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    r2[i] = std::norm(g.nodes[i]);
    r4[i] = std::norm(g.nodes[i]) * std::norm(g.nodes[i]);
  }
  CHECK(std::abs(integrate_disk(r2, g) - kPi / 2.0) <= 1e-8);
  CHECK(std::abs(integrate_disk(r4, g) - kPi / 3.0) <= 1e-8);

  std::vector<cplx> short_samples(3, 1.0);
  CHECK_THROWS_AS(integrate_disk(short_samples, g), std::invalid_argument);
}

TEST_CASE("quadrature exactness on monomials") {
  const DiskGrid g = make_polar_grid(16, 36);
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) {
      if (std::abs(n - m) >= g.n_theta / 2) continue;
      std::vector<cplx> s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        cplx zn(1.0), zm(1.0);
        for (int k = 0; k < n; ++k) zn *= g.nodes[i];
        for (int k = 0; k < m; ++k) zm *= std::conj(g.nodes[i]);
        s[i] = zn * zm;
      }
      const cplx expected = (n == m) ? cplx(kPi / (n + 1.0)) : cplx(0.0);
      CHECK(std::abs(integrate_disk(s, g) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("boundary integration examples") {
  const BoundaryGrid b = make_boundary_grid(64);
  std::vector<cplx> c(b.size(), cplx(2.5, -1.0));
  CHECK(std::abs(integrate_boundary(c, b) - cplx(2.5, -1.0)) <= 1e-12);

  std::vector<cplx> eit(b.size()), parseval(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    eit[j] = b.nodes[j];
    const cplx v = b.nodes[j] * b.nodes[j] + 1.0;
    parseval[j] = std::norm(v);
  }
  CHECK(std::abs(integrate_boundary(eit, b)) <= 1e-12);
  CHECK(std::abs(integrate_boundary(parseval, b) - 2.0) <= 1e-10);
}

TEST_CASE("fourier coefficients examples") {
  const BoundaryGrid b = make_boundary_grid(32);
  std::vector<cplx> s(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) s[j] = std::polar(1.0, 2.0 * b.angles[j]);
  const BoundaryFunction f = fourier_coeffs(s, 3, b);
  for (int n = -3; n <= 3; ++n) {
    CHECK(std::abs(f.coeff(n) - (n == 2 ? cplx(1.0) : cplx(0.0))) <= 1e-12);
  }

  std::vector<cplx> threes(b.size(), 3.0);
  CHECK(std::abs(fourier_coeffs(threes, 1, b).coeff(0) - 3.0) <= 1e-12);

  for (std::size_t j = 0; j < b.size(); ++j) {
    s[j] = std::polar(1.0, -b.angles[j]) + 0.5 * std::polar(1.0, b.angles[j]);
  }
  const BoundaryFunction g = fourier_coeffs(s, 2, b);
  CHECK(std::abs(g.coeff(-1) - 1.0) <= 1e-12);
  CHECK(std::abs(g.coeff(1) - 0.5) <= 1e-12);

  CHECK_THROWS_AS(fourier_coeffs(s, 16, b), std::invalid_argument);
}

TEST_CASE("fourier round trip is the identity on band-limited data") {
  const BoundaryGrid b = make_boundary_grid(64);
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  BoundaryFunction f(10);
  for (int n = -10; n <= 10; ++n) f.at(n) = cplx(gauss(rng), gauss(rng));
  std::vector<cplx> samples(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) samples[j] = f.eval(b.angles[j]);
  const BoundaryFunction g = fourier_coeffs(samples, 10, b);
  for (int n = -10; n <= 10; ++n) CHECK(std::abs(g.coeff(n) - f.coeff(n)) <= 1e-10);
  for (std::size_t j = 0; j < b.size(); ++j) {
    CHECK(std::abs(g.eval(b.angles[j]) - samples[j]) <= 1e-10);
  }
}

TEST_CASE("mobius examples") {
  CHECK(std::abs(mobius(0.0, cplx(0.3, 0.4)) - cplx(-0.3, -0.4)) <= 1e-15);
  const cplx a(0.3, 0.1);
  CHECK(std::abs(mobius(a, a)) <= 1e-15);
  CHECK(std::abs(mobius(a, mobius(a, cplx(0.5))) - 0.5) <= 1e-12);
  CHECK_THROWS_AS(mobius(cplx(1.0), cplx(0.0)), std::invalid_argument);

  // circle to circle
  for (int j = 0; j < 16; ++j) {
    const cplx z = std::polar(1.0, 2.0 * kPi * j / 16.0);
    CHECK(std::abs(std::abs(mobius(a, z)) - 1.0) <= 1e-14);
  }
}

TEST_CASE("compose_poly_mobius examples") {
  const AnalyticPoly z({0.0, 1.0});
  const AnalyticPoly negz = compose_poly_mobius(z, 0.0, 4);
  CHECK(std::abs(negz.coeff(0)) <= 1e-12);
  CHECK(std::abs(negz.coeff(1) + 1.0) <= 1e-12);

  const AnalyticPoly one = compose_poly_mobius(AnalyticPoly::constant(1.0), cplx(0.2, 0.3), 4);
  CHECK(std::abs(one.coeff(0) - 1.0) <= 1e-12);
  CHECK(std::abs(one.coeff(1)) <= 1e-12);

  // (1/2 - z)/(1 - z/2) = 1/2 - (3/4) z - (3/8) z^2 - ...
  const AnalyticPoly comp = compose_poly_mobius(z, 0.5, 8);
  CHECK(std::abs(comp.coeff(0) - 0.5) <= 1e-12);
  CHECK(std::abs(comp.coeff(1) + 0.75) <= 1e-12);
  CHECK(std::abs(comp.coeff(2) + 0.375) <= 1e-12);
  CHECK(std::abs(comp.coeff(3) + 0.1875) <= 1e-12);

  // uniform tail: compare against direct evaluation on a circle of radius 0.95
  const AnalyticPoly p({1.0, cplx(0.0, 2.0), 0.5, -1.25});
  const cplx a(0.4, -0.2);
  const AnalyticPoly q = compose_poly_mobius(p, a, 48);
  for (int j = 0; j < 12; ++j) {
    const cplx w = std::polar(0.95, 2.0 * kPi * j / 12.0);
    CHECK(std::abs(q.eval(w) - p.eval(mobius(a, w))) <= 1e-10);
  }
}

TEST_SUITE_END();
