#pragma once

// Eigen-backed spectral helper, kept out of testutil.hpp so only the suites
// that check positive semidefiniteness pay the Eigen compile cost.

#include <Eigen/Eigenvalues>

#include "gkd/kernels.hpp"

namespace gkdtest {

inline double min_eigenvalue(const gkd::GramMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace gkdtest
