#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qrealize {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Numerical cutoffs shared by every stage of the pipeline. All three are
/// relative: they are multiplied by a magnitude appropriate to the quantity
/// being tested (largest singular value, norm of the terms of an identity).
struct TolerancePolicy {
  double rank_rel_tol = 1e-9;
  double residual_tol = 1e-8;
  double symmetry_tol = 1e-10;

  /// Throws ContractError unless every field is strictly positive and finite.
  void validate() const;
};

// Structural predicates. Each compares the defect norm against
// tol * ||X||_F, so the zero matrix satisfies all of them.
bool is_symmetric(const RealMatrix& x, double tol);
bool is_skew_symmetric(const RealMatrix& x, double tol);
bool is_hermitian(const ComplexMatrix& x, double tol);
/// Hermitian within tol and smallest eigenvalue >= -tol * ||X||_F.
bool is_psd(const ComplexMatrix& x, double tol);

/// Eigen-decomposition H = U^dagger diag(D) U.
///
/// Eigenvalues are sorted descending. Row k of U is the conjugate of the k-th
/// eigenvector, whose phase is fixed so that its first entry of maximal
/// modulus is real and positive. Equal eigenvalues keep the solver's order,
/// which is deterministic for a given input.
struct HermitianEig {
  ComplexMatrix U;
  RealVector D;
};

/// Throws ContractError if H is not Hermitian within tol.symmetry_tol.
HermitianEig hermitian_eig(const ComplexMatrix& h, const TolerancePolicy& tol = {});

/// Number of singular values strictly above
/// rank_rel_tol * max(sigma_max, reference_scale). With the default
/// reference_scale of 0 this is the plain relative cutoff; a positive scale
/// lets callers measure against the magnitude of the terms a matrix was
/// formed from, so that cancellation noise is not counted as rank.
int numerical_rank(const RealMatrix& m, const TolerancePolicy& tol = {},
                   double reference_scale = 0.0);
int numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol = {},
                   double reference_scale = 0.0);

/// Singular values of a real matrix by one-sided Jacobi rotations, sorted
/// descending. Written independently of Eigen's SVD so the real-embedding
/// rank route does not share code with the direct route.
RealVector jacobi_singular_values(const RealMatrix& m);

/// Half the numerical rank of [[re, im], [-im, re]], computed with
/// jacobi_singular_values. Equals the rank of re + i*im.
int complex_rank_via_real_embedding(const RealMatrix& re, const RealMatrix& im,
                                    const TolerancePolicy& tol = {},
                                    double reference_scale = 0.0);

/// k x n matrix L with L^dagger L = xi2, built from the top-k eigenpairs.
/// Throws FactorizationError if xi2 has an eigenvalue below
/// -symmetry_tol * scale, or if its numerical rank (cutoff relative to
/// max(lambda_max, reference_scale)) is not k.
ComplexMatrix psd_low_rank_factor(const ComplexMatrix& xi2, int k,
                                  const TolerancePolicy& tol = {},
                                  double reference_scale = 0.0);

/// ||diff|| / scale, falling back to the absolute norm when scale is zero.
double relative_residual(double diff_norm, double scale);

}  // namespace qrealize
