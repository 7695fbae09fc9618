#include "wolffd/multiplier_ops.hpp"

#include <cmath>

namespace wolffd {

OperatorMatrix mult_matrix(const AnalyticPoly& phi, int N) {
  const int d = phi.degree();
  if (N < d) throw std::invalid_argument("mult_matrix: need N >= deg(phi)");
  OperatorMatrix A;
  A.N = N;
  A.entries = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  // phi e_n = phi z^n / sqrt(n+1) = sum_k phi_k sqrt(n+k+1)/sqrt(n+1) e_{n+k}
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= d && n + k <= N; ++k) {
      const int m = n + k;
      A.entries(m, n) = phi.coeff(k) * std::sqrt((m + 1.0) / (n + 1.0));
    }
  }
  return A;
}

double op_norm(const Eigen::MatrixXcd& A, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("op_norm: tol must be positive");
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  // Power iteration on the smaller of A^* A and A A^*.
  const bool use_gram = A.cols() <= A.rows();
  const Eigen::MatrixXcd B =
      use_gram ? Eigen::MatrixXcd(A.adjoint() * A) : Eigen::MatrixXcd(A * A.adjoint());
  const Eigen::Index m = B.rows();
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m) / std::sqrt(static_cast<double>(m));
  double lambda = 0.0;
  double prev_delta = -1.0;
  const long cap = 100000;
  for (long it = 0; it < cap; ++it) {
    Eigen::VectorXcd w = B * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    const double rq = std::real(v.dot(w));  // Rayleigh quotient, v unit
    v = w / nw;
    const double delta = std::abs(rq - lambda);
    lambda = rq;
    if (it > 0) {
      // Aitken-style error estimate delta * q / (1 - q) for geometric decay q.
      double err = delta;
      if (prev_delta > 0.0 && delta < prev_delta) {
        const double q = delta / prev_delta;
        err = delta * q / (1.0 - q);
      }
      if (err <= tol * std::max(lambda, 1e-300) || delta == 0.0) {
        return std::sqrt(std::max(lambda, 0.0));
      }
    }
    prev_delta = delta;
  }
  throw convergence_error("op_norm: power iteration hit the iteration cap",
                          std::sqrt(std::max(lambda, 0.0)));
}

Eigen::MatrixXcd column_matrix(const MultiplierTuple& F, int N) {
  if (F.size() < 1) throw std::invalid_argument("column_matrix: empty tuple");
  if (N < F.max_degree()) throw std::invalid_argument("column_matrix: need N >= max degree");
  Eigen::MatrixXcd A(static_cast<Eigen::Index>(F.size()) * (N + 1), N + 1);
  for (int j = 0; j < F.size(); ++j) {
    A.block(static_cast<Eigen::Index>(j) * (N + 1), 0, N + 1, N + 1) =
        mult_matrix(F.polys[j], N).entries;
  }
  return A;
}

Eigen::MatrixXcd row_matrix(const MultiplierTuple& F, int N) {
  if (F.size() < 1) throw std::invalid_argument("row_matrix: empty tuple");
  if (N < F.max_degree()) throw std::invalid_argument("row_matrix: need N >= max degree");
  Eigen::MatrixXcd A(N + 1, static_cast<Eigen::Index>(F.size()) * (N + 1));
  for (int j = 0; j < F.size(); ++j) {
    A.block(0, static_cast<Eigen::Index>(j) * (N + 1), N + 1, N + 1) =
        mult_matrix(F.polys[j], N).entries;
  }
  return A;
}

double column_norm(const MultiplierTuple& F, int N, double tol) {
  return op_norm(column_matrix(F, N), tol);
}

double row_norm(const MultiplierTuple& F, int N, double tol) {
  return op_norm(row_matrix(F, N), tol);
}

double adjoint_kernel_defect(const AnalyticPoly& phi, cplx z, int N) {
  const OperatorMatrix A = mult_matrix(phi, N);
  Eigen::VectorXcd k(N + 1);
  cplx zbar_n(1.0);
  for (int n = 0; n <= N; ++n) {
    k(n) = zbar_n / std::sqrt(n + 1.0);  // coordinates of k_z in the e_n basis
    zbar_n *= std::conj(z);
  }
  const Eigen::VectorXcd defect = A.entries.adjoint() * k - std::conj(phi.eval(z)) * k;
  return defect.norm() / k.norm();
}

double positivity_gap(const MultiplierTuple& F, const AnalyticPoly& H, double K, int N) {
  const AnalyticPoly h3 = cube(H);
  if (N < h3.degree() || N < F.max_degree()) {
    throw std::invalid_argument("positivity_gap: N under-resolves the data");
  }
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  for (const auto& f : F.polys) {
    const Eigen::MatrixXcd M = mult_matrix(f, N).entries;
    S += M * M.adjoint();
  }
  const Eigen::MatrixXcd M3 = mult_matrix(h3, N).entries;
  const Eigen::MatrixXcd G = K * K * S - M3 * M3.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace wolffd
