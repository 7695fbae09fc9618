#include <cmath>
#include <random>

#include "doctest.h"
#include "wolffd/cauchy_singular.hpp"
#include "wolffd/verify_lemmas.hpp"

using namespace wolffd;

namespace {

MonomialExpansion mono(int n, int m, cplx a = 1.0) {
  MonomialExpansion f;
  f.add(n, m, a);
  return f;
}

std::vector<cplx> interior_points(int count, unsigned seed, double rmax = 0.7) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> rad(0.05, rmax), ang(0.0, 2.0 * kPi);
  std::vector<cplx> pts(count);
  for (auto& z : pts) z = std::polar(rad(rng), ang(rng));
  return pts;
}

}  // namespace

TEST_SUITE_BEGIN("cauchy_singular");

TEST_CASE("cauchy transform closed forms") {
  const cplx z(0.3, -0.45);
  // 1 -> conj z
  CHECK(std::abs(cauchy_transform(mono(0, 0), z) - std::conj(z)) <= 1e-15);
  // conj u -> conj(z)^2 / 2
  CHECK(std::abs(cauchy_transform(mono(0, 1), z) - std::conj(z) * std::conj(z) / 2.0) <=
        1e-15);
  // u -> z conj z - 1
  CHECK(std::abs(cauchy_transform(mono(1, 0), z) - (z * std::conj(z) - 1.0)) <= 1e-15);
  CHECK(std::abs(cauchy_transform(mono(1, 0), cplx(0.0)) + 1.0) <= 1e-15);
}

TEST_CASE("cauchy transform against the quadrature oracle") {
  const auto pts = interior_points(20, 101);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const MonomialExpansion w = mono(n, m, cplx(0.7, -0.3));
      for (const cplx z : pts) {
        CHECK(std::abs(cauchy_transform(w, z) - cauchy_quadrature_oracle(w, z)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("dbar of the cauchy transform recovers the density") {
  CHECK(dbar_defect(mono(0, 0), cplx(0.3), 1e-4) <= 1e-6);
  CHECK(dbar_defect(mono(0, 1), cplx(0.2, 0.1), 1e-4) <= 1e-6);
  CHECK(dbar_defect(mono(1, 0), cplx(-0.4, 0.25), 1e-4) <= 1e-6);
  MonomialExpansion mixed;
  mixed.add(2, 1, cplx(1.0, 2.0));
  mixed.add(0, 3, -0.5);
  mixed.add(3, 0, cplx(0.0, 1.0));
  CHECK(dbar_defect(mixed, cplx(0.35, -0.2), 1e-4) <= 1e-6);
  CHECK_THROWS_AS(dbar_defect(mixed, cplx(0.999), 1e-2), std::invalid_argument);
}

TEST_CASE("beurling derivative closed forms") {
  const cplx z(0.25, 0.55);
  CHECK(std::abs(beurling_derivative(mono(0, 0), z)) == 0.0);
  CHECK(std::abs(beurling_derivative(mono(1, 0), z) - std::conj(z)) <= 1e-15);
  CHECK(std::abs(beurling_derivative(mono(0, 1), z)) == 0.0);

  // finite differences of the closed-form transform in the z direction
  MonomialExpansion mixed;
  mixed.add(2, 2, 1.0);
  mixed.add(3, 1, cplx(0.5, -1.0));
  const double hstep = 1e-5;
  const cplx fx = (cauchy_transform(mixed, z + hstep) - cauchy_transform(mixed, z - hstep)) /
                  (2.0 * hstep);
  const cplx fy = (cauchy_transform(mixed, z + cplx(0.0, hstep)) -
                   cauchy_transform(mixed, z - cplx(0.0, hstep))) /
                  (2.0 * hstep);
  const cplx dz = 0.5 * (fx - cplx(0.0, 1.0) * fy);
  CHECK(std::abs(dz - beurling_derivative(mixed, z)) <= 1e-8);
}

TEST_CASE("T closed forms: constants, z, z^2") {
  for (const cplx lam : interior_points(10, 7)) {
    CHECK(std::abs(T_apply(mono(0, 0), lam)) == 0.0);
    CHECK(std::abs(T_apply(mono(1, 0), lam) - kPi) <= 1e-14);
    CHECK(std::abs(T_apply(mono(2, 0), lam) - kPi * lam) <= 1e-14);
    // conj-analytic monomials are annihilated
    CHECK(std::abs(T_apply(mono(0, 2), lam)) == 0.0);
  }
}

TEST_CASE("T against the quadrature oracle") {
  const auto pts = interior_points(12, 33);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const MonomialExpansion f = mono(n, m, cplx(-0.4, 0.9));
      for (const cplx lam : pts) {
        CHECK(std::abs(T_apply(f, lam) - T_quadrature_oracle(f, lam)) <= 1e-5);
      }
    }
  }
}

TEST_CASE("rotation decomposition and the 2 pi Parseval factor") {
  MonomialExpansion f;
  f.add(1, 0, 1.0);  // z
  auto profs = rotation_decompose(f);
  REQUIRE(profs.size() == 1);
  CHECK(profs[0].l == 1);
  REQUIRE(profs[0].terms.size() == 1);
  CHECK(profs[0].terms[0].first == 1);

  f = mono(0, 1);  // conj z
  profs = rotation_decompose(f);
  CHECK(profs[0].l == -1);
  CHECK(profs[0].terms[0].first == 1);

  f = mono(1, 1);  // |z|^2
  profs = rotation_decompose(f);
  CHECK(profs[0].l == 0);
  CHECK(profs[0].terms[0].first == 2);

  // ||f||_A^2 = 2 pi sum_l int |f_l|^2 r dr on a mixed expansion
  MonomialExpansion g;
  g.add(2, 0, cplx(1.0, 1.0));
  g.add(1, 1, 0.5);
  g.add(0, 2, cplx(0.0, -2.0));
  g.add(3, 1, 1.0);
  double sum = 0.0;
  std::vector<double> gx, gw;
  gauss_legendre(64, 0.0, 1.0, gx, gw);
  for (const auto& prof : rotation_decompose(g)) {
    for (std::size_t i = 0; i < gx.size(); ++i) {
      sum += gw[i] * std::norm(prof.eval(gx[i])) * gx[i];
    }
  }
  CHECK(area_norm_sq(g) == doctest::Approx(2.0 * kPi * sum).epsilon(1e-12));
}

TEST_CASE("T_l closed kernels") {
  // l = 0, f = 1: the two terms cancel for every s
  RadialProfile one{0, {{0, 1.0}}};
  for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    CHECK(std::abs(T_l_apply(0, one, s)) <= 1e-14);
  }

  RadialProfile zero{1, {}};
  CHECK(std::abs(T_l_apply(1, zero, 0.5)) == 0.0);

  // l = 1, f_1(r) = r: (1/(1-s^2)) int_s^1 r dr = 1/2 for every s
  RadialProfile lin{1, {{1, 1.0}}};
  CHECK(std::abs(T_l_apply(1, lin, 0.5) - 0.5) <= 1e-14);
  CHECK(std::abs(T_l_apply(1, lin, 0.9) - 0.5) <= 1e-14);

  // l = 2, f_2(r) = r^2 gives s/2 (matches T(z^2) = pi lam)
  RadialProfile quad{2, {{2, 1.0}}};
  CHECK(std::abs(T_l_apply(2, quad, 0.37) - 0.185) <= 1e-14);

  // l = -1, f(r) = r is annihilated (matches T(conj z) = 0)
  RadialProfile neg{-1, {{1, 1.0}}};
  for (double s : {0.2, 0.5, 0.8}) {
    CHECK(std::abs(T_l_apply(-1, neg, s)) <= 1e-14);
  }

  // l = 0, f_0(r) = r^2: closed value s/4 (matches T(|z|^2) = pi conj(lam)/2)
  RadialProfile r2{0, {{2, 1.0}}};
  CHECK(std::abs(T_l_apply(0, r2, 0.6) - 0.15) <= 1e-14);

  CHECK_THROWS_AS(T_l_apply(0, one, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(T_l_apply(0, one, 0.0), std::invalid_argument);
}

TEST_CASE("rotation identity on monomials") {
  const DiskGrid grid = make_polar_grid(24, 48);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      CHECK(rotation_identity_defect(mono(n, m), grid) <= 1e-5);
    }
  }
  // and on a mixed expansion
  MonomialExpansion g;
  g.add(2, 1, cplx(0.3, -0.7));
  g.add(0, 0, 1.0);
  g.add(1, 2, cplx(0.0, 0.4));
  CHECK(rotation_identity_defect(g, grid) <= 1e-5);
}

TEST_CASE("schur certificates stay within the stated constants") {
  CHECK(schur_certificate(0, SchurWeight::one) <= 1.25 + 1e-3);
  CHECK(schur_certificate(0, SchurWeight::inv_sqrt) <= 1.0 + 1e-3);
  for (int l : {1, 2, 5, 10, 30}) {
    CHECK(schur_certificate(l, SchurWeight::inv_sqrt) <= 1.5 + 1e-3);
  }
  for (int l : {-1, -2, -5, -10, -30}) {
    CHECK(schur_norm_sq_bound(l) <= 5.0 + 1e-3);
  }
}

TEST_CASE("discretized T_l norms and schur domination") {
  double sup = 0.0;
  for (int l = -30; l <= 30; ++l) {
    const double est = T_l_norm_estimate(l, 96);
    sup = std::max(sup, est);
    CHECK(est <= 5.0 + 1e-2);
    // the Schur value certifies ||T_l||^2, so its root must dominate
    CHECK(est <= std::sqrt(schur_norm_sq_bound(l)) + 1e-6);
  }
  CHECK(T_l_norm_estimate(0, 96) <= std::sqrt(4.5) + 1e-2);
  CHECK(sup <= 5.0 + 1e-2);
  CHECK_THROWS_AS(T_l_norm_estimate(0, 16), std::invalid_argument);
}

TEST_CASE("global bound ||Tf||_A^2 <= 100 pi^2 ||f||_A^2") {
  std::mt19937 rng(97);
  std::normal_distribution<double> gauss;
  const DiskGrid g = make_polar_grid(48, 96);
  for (int t = 0; t < 10; ++t) {
    MonomialExpansion f;
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        f.add(n, m, cplx(gauss(rng), gauss(rng)));
      }
    }
    std::vector<cplx> tf(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      tf[i] = std::norm(T_apply(f, g.nodes[i]));
    }
    const double tf_sq = integrate_disk(tf, g).real();
    CHECK(tf_sq <= 100.0 * kPi * kPi * area_norm_sq(f));
  }
}

TEST_CASE("expansion forms match pointwise evaluation") {
  MonomialExpansion f;
  f.add(2, 1, cplx(0.5, -0.25));
  f.add(0, 3, 1.0);
  f.add(4, 0, cplx(0.0, 1.0));
  f.add(1, 1, -0.75);
  const MonomialExpansion ce = cauchy_transform_expansion(f);
  const MonomialExpansion be = beurling_derivative_expansion(f);
  const MonomialExpansion te = T_expansion(f);
  for (const cplx z : interior_points(10, 55, 0.95)) {
    CHECK(std::abs(ce.eval(z) - cauchy_transform(f, z)) <= 1e-13);
    CHECK(std::abs(be.eval(z) - beurling_derivative(f, z)) <= 1e-13);
    CHECK(std::abs(te.eval(z) - T_apply(f, z)) <= 1e-13);
  }
  // circle evaluation agrees with direct evaluation
  std::vector<double> angles;
  for (int j = 0; j < 8; ++j) angles.push_back(-kPi + 2.0 * kPi * j / 8.0);
  const auto ring = eval_on_circle(te, 0.6, angles);
  for (int j = 0; j < 8; ++j) {
    CHECK(std::abs(ring[j] - te.eval(std::polar(0.6, angles[j]))) <= 1e-13);
  }
}

TEST_SUITE_END();
