#pragma once

#include "qrealize/linalg.hpp"

namespace qrealize {

/// k x k block diagonal matrix with every 2x2 block equal to J = [[0, 1], [-1, 0]].
/// Throws DimensionError for odd or nonpositive k.
RealMatrix build_theta(int k);

/// Permutation that gathers odd-indexed entries ahead of even-indexed ones:
/// P * (a1, a2, ..., a2m) = (a1, a3, ..., a2m-1, a2, a4, ..., a2m), acting on
/// column vectors. size = 0 yields the empty matrix.
RealMatrix build_P(int size);

/// M = 1/2 [[1, i], [1, -i]].
ComplexMatrix build_M();

/// Block diagonal matrix with M repeated size/2 times.
ComplexMatrix build_diag_M(int size);

/// Gamma = P * diag(M). Satisfies 2 * Gamma^dagger * Gamma = I.
ComplexMatrix build_gamma(int size);

/// Sigma = [I_{rows} 0], rows x cols selector.
RealMatrix build_sigma(int rows, int cols);

/// P^T [[0, I], [-I, 0]] P, the form in which the output condition of the
/// realizability theorem is first written. Equals build_theta(size).
RealMatrix permuted_symplectic_form(int size);

/// Every fixed matrix the construction needs for one choice of dimensions.
struct CanonicalStructure {
  RealMatrix theta_n;
  RealMatrix theta_nu;
  RealMatrix theta_ny;
  RealMatrix P_ny;           ///< n_y x n_y, used for the output coupling block
  RealMatrix P_nu;           ///< n_u x n_u, used for the input coupling block
  ComplexMatrix M;
  ComplexMatrix gamma;       ///< (n_v + n_u) square
  RealMatrix sigma_ny;       ///< (n_y/2) x ((n_v + n_u)/2)
};

/// Requires n, n_u, n_y >= 2 and even, n_v >= n_y and even.
CanonicalStructure canonical_structure(int n, int n_u, int n_y, int n_v);

/// Vacuum Ito matrices F = I + i diag(J) for the extra and input noises, and
/// the skew part T_w = 1/2 blockdiag(F_v - F_v^T, F_u - F_u^T).
struct NoiseItoStructure {
  ComplexMatrix F_v;
  ComplexMatrix F_u;
  ComplexMatrix T_w;
};

NoiseItoStructure noise_ito_structure(int n_v, int n_u);

}  // namespace qrealize
