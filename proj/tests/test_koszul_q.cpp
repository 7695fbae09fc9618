#include <cmath>
#include <random>

#include "doctest.h"
#include "wolffd/koszul_q.hpp"

using namespace wolffd;

namespace {

double q_identity_defect(const Eigen::VectorXcd& C) {
  const Eigen::MatrixXcd Q = q_matrix(C);
  const double cc = C.squaredNorm();
  const Eigen::MatrixXcd target =
      cc * Eigen::MatrixXcd::Identity(C.size(), C.size()) - C.conjugate() * C.transpose();
  return (Q * Q.adjoint() - target).norm();
}

}  // namespace

TEST_SUITE_BEGIN("koszul_q");

TEST_CASE("small explicit patterns") {
  Eigen::VectorXcd C(2);
  C << 1.0, 0.0;
  Eigen::MatrixXcd Q = q_matrix(C);
  REQUIRE(Q.rows() == 2);
  REQUIRE(Q.cols() == 1);
  CHECK(std::abs(Q(0, 0)) == 0.0);
  CHECK(std::abs(Q(1, 0) + 1.0) <= 1e-15);
  Eigen::MatrixXcd QQ = Q * Q.adjoint();
  CHECK(std::abs(QQ(0, 0)) <= 1e-15);
  CHECK(std::abs(QQ(1, 1) - 1.0) <= 1e-15);

  C << 1.0, 2.0;
  Q = q_matrix(C);
  CHECK(std::abs(Q(0, 0) - 2.0) <= 1e-15);
  CHECK(std::abs(Q(1, 0) + 1.0) <= 1e-15);
  QQ = Q * Q.adjoint();
  CHECK(std::abs(QQ(0, 0) - 4.0) <= 1e-15);
  CHECK(std::abs(QQ(0, 1) + 2.0) <= 1e-15);
  CHECK(std::abs(QQ(1, 0) + 2.0) <= 1e-15);
  CHECK(std::abs(QQ(1, 1) - 1.0) <= 1e-15);

  // n = 1: empty 1x0 matrix
  Eigen::VectorXcd C1(1);
  C1 << cplx(2.0, 1.0);
  const Eigen::MatrixXcd Q1 = q_matrix(C1);
  CHECK(Q1.rows() == 1);
  CHECK(Q1.cols() == 0);
}

TEST_CASE("QQ* identity, kernel property, and rank on random rows") {
  std::mt19937 rng(17);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<int> size(2, 20);
  for (int t = 0; t < 40; ++t) {
    const int n = size(rng);
    Eigen::VectorXcd C(n);
    for (int j = 0; j < n; ++j) C(j) = cplx(gauss(rng), gauss(rng));
    const double scale = C.squaredNorm();
    CHECK(q_identity_defect(C) <= 1e-12 * std::max(1.0, scale));

    const Eigen::MatrixXcd Q = q_matrix(C);
    CHECK((C.transpose() * Q).norm() <= 1e-12 * std::max(1.0, scale));

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Q);
    const double smax = svd.singularValues()(0);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > 1e-10 * smax) ++rank;
    }
    CHECK(rank == n - 1);
  }

  // a zero entry does not cost rank
  Eigen::VectorXcd C(3);
  C << 0.0, 0.0, 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(q_matrix(C));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-12) ++rank;
  }
  CHECK(rank == 2);
}

TEST_CASE("q_of_F examples and analyticity") {
  MultiplierTuple Fz1;
  Fz1.polys = {AnalyticPoly::monomial(1), AnalyticPoly::constant(1.0)};
  Eigen::MatrixXcd Q0 = q_of_F(Fz1, 0.0);
  CHECK(std::abs(Q0(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(Q0(1, 0)) <= 1e-15);

  MultiplierTuple Fone;
  Fone.polys = {AnalyticPoly::constant(1.0)};
  CHECK(q_of_F(Fone, cplx(0.2, 0.4)).cols() == 0);

  MultiplierTuple Fh;
  Fh.polys = {AnalyticPoly({0.0, 0.5}), AnalyticPoly({0.5})};
  const Eigen::MatrixXcd Qi = q_of_F(Fh, cplx(0.0, 1.0));
  CHECK(std::abs(Qi(0, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(Qi(1, 0) - cplx(0.0, -0.5)) <= 1e-15);

  // Cauchy-Riemann finite differences: entries are analytic in z
  MultiplierTuple F;
  F.polys = {AnalyticPoly({0.1, cplx(0.0, 0.5), 0.3}), AnalyticPoly({0.5, -0.2}),
             AnalyticPoly({cplx(0.2, 0.2), 0.0, 0.0, 0.1})};
  const cplx z0(0.3, -0.2);
  const double hstep = 1e-6;
  const Eigen::MatrixXcd dx =
      (q_of_F(F, z0 + hstep) - q_of_F(F, z0 - hstep)) / (2.0 * hstep);
  const Eigen::MatrixXcd dy =
      (q_of_F(F, z0 + cplx(0.0, hstep)) - q_of_F(F, z0 - cplx(0.0, hstep))) /
      (2.0 * hstep);
  CHECK((dx + cplx(0.0, 1.0) * dy).norm() / 2.0 <= 1e-6);
}

TEST_CASE("q_derivative examples and difference-quotient check") {
  MultiplierTuple Fz1;
  Fz1.polys = {AnalyticPoly::monomial(1), AnalyticPoly::constant(1.0)};
  for (const cplx z : {cplx(0.0), cplx(0.5, 0.2), cplx(-0.7, 0.1)}) {
    const Eigen::MatrixXcd D = q_derivative(Fz1, z);
    CHECK(std::abs(D(0, 0)) <= 1e-15);
    CHECK(std::abs(D(1, 0) + 1.0) <= 1e-15);
  }

  MultiplierTuple Fconst;
  Fconst.polys = {AnalyticPoly::constant(0.3), AnalyticPoly::constant(cplx(0.0, 1.0))};
  CHECK(q_derivative(Fconst, cplx(0.4, 0.1)).norm() == 0.0);

  MultiplierTuple F2;
  F2.polys = {AnalyticPoly::monomial(2), AnalyticPoly::monomial(1)};
  const Eigen::MatrixXcd D1 = q_derivative(F2, 1.0);
  CHECK(std::abs(D1(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(D1(1, 0) + 2.0) <= 1e-15);

  MultiplierTuple F;
  F.polys = {AnalyticPoly({0.1, cplx(0.0, 0.5), 0.3}), AnalyticPoly({0.5, -0.2}),
             AnalyticPoly({cplx(0.2, 0.2), 0.0, 0.0, 0.1})};
  const cplx z0(0.25, 0.4);
  const double hstep = 1e-5;
  const Eigen::MatrixXcd quotient =
      (q_of_F(F, z0 + hstep) - q_of_F(F, z0 - hstep)) / (2.0 * hstep);
  CHECK((quotient - q_derivative(F, z0)).norm() <= 1e-8);
}

TEST_SUITE_END();
