#include "wolffd/koszul_q.hpp"

namespace wolffd {

namespace {

Eigen::MatrixXcd q_from_values(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("q_matrix: need n >= 1");
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(n, q_num_columns(n));
  Eigen::Index col = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k, ++col) {
      Q(j, col) = c[k];
      Q(k, col) = -c[j];
    }
  }
  return Q;
}

}  // namespace

Eigen::MatrixXcd q_matrix(const Eigen::VectorXcd& C) {
  std::vector<cplx> c(C.data(), C.data() + C.size());
  return q_from_values(c);
}

Eigen::MatrixXcd q_of_F(const MultiplierTuple& F, cplx z) {
  return q_from_values(F.eval(z));
}

Eigen::MatrixXcd q_derivative(const MultiplierTuple& F, cplx z) {
  return q_from_values(F.derivative().eval(z));
}

}  // namespace wolffd
