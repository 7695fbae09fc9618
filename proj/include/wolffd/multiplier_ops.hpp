#pragma once

#include <Eigen/Dense>

#include "wolffd/poly.hpp"

namespace wolffd {

/// Matrix of a multiplication operator in the orthonormal basis
/// e_n = z^n / sqrt(n+1), truncated to degree N.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  int N = 0;
};

/// Compression of M_phi to polynomials of degree <= N.  Lower-banded with
/// bandwidth deg(phi): entry (m, n) = phi_{m-n} sqrt((m+1)/(n+1)).
OperatorMatrix mult_matrix(const AnalyticPoly& phi, int N);

/// Largest singular value by power iteration on the Gram matrix, from the
/// deterministic all-ones start vector.  Relative tolerance tol, iteration
/// cap 1e5; throws convergence_error (carrying the estimate) on stall.
double op_norm(const Eigen::MatrixXcd& A, double tol = 1e-8);
inline double op_norm(const OperatorMatrix& A, double tol = 1e-8) {
  return op_norm(A.entries, tol);
}

/// Stacked column operator [M_{f1}; ...; M_{fn}] at truncation N.
Eigen::MatrixXcd column_matrix(const MultiplierTuple& F, int N);
/// Concatenated row operator [M_{f1} ... M_{fn}] at truncation N.
Eigen::MatrixXcd row_matrix(const MultiplierTuple& F, int N);

double column_norm(const MultiplierTuple& F, int N, double tol = 1e-8);
double row_norm(const MultiplierTuple& F, int N, double tol = 1e-8);

/// Relative defect of the eigenvector identity M_phi^* k_z = conj(phi(z)) k_z
/// on the degree-N kernel truncation.
double adjoint_kernel_defect(const AnalyticPoly& phi, cplx z, int N);

/// Smallest eigenvalue of K^2 (R R^*) - M_{H^3} M_{H^3}^* at truncation N,
/// where R is the row operator of F.  Nonnegative certifies the operator
/// inequality at this truncation.
double positivity_gap(const MultiplierTuple& F, const AnalyticPoly& H, double K, int N);

}  // namespace wolffd
