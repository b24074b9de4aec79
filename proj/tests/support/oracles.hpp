#pragma once

// Reference computations that share no code with the library paths they check.

#include "qrealize/realizability.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace qrealize::testing {

/// Theta entry by formula: +1 at (2j, 2j+1), -1 at (2j+1, 2j), zero elsewhere.
inline double theta_entry(int i, int j) {
  if (i / 2 != j / 2) return 0.0;
  if (i % 2 == 0 && j == i + 1) return 1.0;
  if (i % 2 == 1 && j == i - 1) return -1.0;
  return 0.0;
}

/// S~ by explicit index sums.
inline RealMatrix s_tilde_by_loops(const LtiSystem& sys) {
  const int n = static_cast<int>(sys.A.rows());
  const int nu = static_cast<int>(sys.B.cols());
  const int ny = static_cast<int>(sys.C.rows());
  const RealMatrix& A = sys.A;
  const RealMatrix& B = sys.B;
  const RealMatrix& C = sys.C;

  // TB = Theta_n B  (n x nu)
  RealMatrix tb = RealMatrix::Zero(n, nu);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < nu; ++k)
      for (int l = 0; l < n; ++l) tb(i, k) += theta_entry(i, l) * B(l, k);

  RealMatrix s = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      // Theta B Theta_u B^T Theta = -(TB) Theta_u (TB)^T
      for (int k = 0; k < nu; ++k)
        for (int l = 0; l < nu; ++l) acc -= tb(i, k) * theta_entry(k, l) * tb(j, l);
      for (int l = 0; l < n; ++l) {
        acc -= A(l, i) * theta_entry(l, j);
        acc -= theta_entry(i, l) * A(l, j);
      }
      for (int k = 0; k < ny; ++k)
        for (int l = 0; l < ny; ++l) acc -= C(k, i) * theta_entry(k, l) * C(l, j);
      s(i, j) = acc;
    }
  }
  return s;
}

/// Eigenvalues of a 2x2 Hermitian matrix from its characteristic polynomial, descending.
inline std::vector<double> eig2_hermitian(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double b2 = std::norm(h(0, 1));
  const double mean = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b2);
  return {mean + rad, mean - rad};
}

/// Rank by Gaussian elimination with complete pivoting and an absolute cutoff.
inline int rank_by_elimination(ComplexMatrix m, double cutoff) {
  int rank = 0;
  const auto rows = m.rows();
  const auto cols = m.cols();
  for (Eigen::Index step = 0; step < std::min(rows, cols); ++step) {
    Eigen::Index pr = step, pc = step;
    double best = 0.0;
    for (Eigen::Index i = step; i < rows; ++i)
      for (Eigen::Index j = step; j < cols; ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pr = i;
          pc = j;
        }
    if (best <= cutoff) break;
    m.row(step).swap(m.row(pr));
    m.col(step).swap(m.col(pc));
    for (Eigen::Index i = step + 1; i < rows; ++i) {
      const std::complex<double> f = m(i, step) / m(step, step);
      m.row(i) -= f * m.row(step);
    }
    ++rank;
  }
  return rank;
}

}  // namespace qrealize::testing
