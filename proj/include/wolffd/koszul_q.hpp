#pragma once

#include <Eigen/Dense>

#include "wolffd/poly.hpp"

namespace wolffd {

/// Explicit n x n(n-1)/2 matrix Q with entries 0 or +-c_j satisfying
/// Q Q^* = (C C^*) I - C^* C and range Q = ker C.  Columns are indexed by
/// pairs (j, k), 1 <= j < k <= n, in lexicographic order; column (j, k)
/// carries +c_k in row j and -c_j in row k.  Entries are unconjugated so
/// that z -> Q(F(z)) stays analytic.
Eigen::MatrixXcd q_matrix(const Eigen::VectorXcd& C);

/// Q evaluated on the row F(z); entries are +-f_j(z).
Eigen::MatrixXcd q_of_F(const MultiplierTuple& F, cplx z);

/// Entrywise z-derivative of q_of_F: the same pattern built from F'(z).
Eigen::MatrixXcd q_derivative(const MultiplierTuple& F, cplx z);

inline Eigen::Index q_num_columns(int n) {
  return static_cast<Eigen::Index>(n) * (n - 1) / 2;
}

}  // namespace wolffd
