#pragma once

#include "qrealize/canonical.hpp"
#include "qrealize/linalg.hpp"

#include <string>
#include <vector>

namespace qrealize {

/// dx = A x dt + [B1 B] [dv; du],  dy = C x dt + [D1 0] [dv; du].
/// Only the (A, B, C) part is given; B1 and D1 are what realization supplies.
struct LtiSystem {
  RealMatrix A;
  RealMatrix B;
  RealMatrix C;

  int n() const { return static_cast<int>(A.rows()); }
  int n_u() const { return static_cast<int>(B.cols()); }
  int n_y() const { return static_cast<int>(C.rows()); }
};

/// Returns sys unchanged if n, n_u, n_y are even and at least 2, n_y == n_u,
/// and the shapes of A, B, C agree; otherwise throws ValidationError naming
/// the first violated invariant.
LtiSystem validate_system(LtiSystem sys);

/// S~ = Theta_n B Theta_nu B^T Theta_n - A^T Theta_n - Theta_n A - C^T Theta_ny C
/// and its Hermitian companion S = (i/4) S~.
struct SkewReport {
  RealMatrix S_tilde;
  ComplexMatrix S;
  HermitianEig eig;      ///< of S, eigenvalues descending
  int rank_r = 0;
  TolerancePolicy tol;
  /// Sum of the Frobenius norms of the four terms of S~. Rank and
  /// multiplicity cutoffs are taken relative to max(||S~||, term_scale) so
  /// that an S~ that cancels to rounding noise reports rank 0.
  double term_scale = 0.0;
  /// ||S~ - S~^T||/2 before exact skew-symmetrization, for diagnostics.
  double skew_defect = 0.0;

  const RealVector& eigenvalues() const { return eig.D; }
};

/// Throws NumericalError if the raw S~ is not skew within symmetry_tol
/// relative to term_scale, or if its numerical rank comes out odd.
SkewReport compute_S_tilde(const LtiSystem& sys, const TolerancePolicy& tol = {});

struct NoiseCount {
  int r = 0;
  int n_v = 0;
};

/// r = rank S~ and n_v = n_u + r.
NoiseCount minimal_noise_count(const LtiSystem& sys, const TolerancePolicy& tol = {});
NoiseCount minimal_noise_count(const LtiSystem& sys, const SkewReport& skew);

/// Eigenvalue-multiplicity bound n_u + 2 (n - n_lambda), where n_lambda is the
/// multiplicity of the most negative eigenvalue of i S~. Eigenvalues within
/// 1e-7 * max(max|lambda|, term_scale) of the minimum count toward it.
int theorem2_noise_count(const LtiSystem& sys, const TolerancePolicy& tol = {});
int theorem2_noise_count(const LtiSystem& sys, const SkewReport& skew);

/// Multiplicity of the least element of `values` under an absolute gap.
int least_eigenvalue_multiplicity(const RealVector& values, double gap);

/// One verified identity: its absolute defect norm, the norm it was divided
/// by, and whether the relative value met the threshold.
struct Residual {
  std::string name;
  double absolute = 0.0;
  double scale = 0.0;
  double value = 0.0;      ///< relative_residual(absolute, scale)
  double tolerance = 0.0;
  bool pass = false;
};

struct ResidualReport {
  std::vector<Residual> entries;

  void add(std::string name, double absolute, double scale, double tolerance);
  bool all_pass() const;
  /// nullptr if absent.
  const Residual* find(const std::string& name) const;
};

namespace residual_names {
inline constexpr const char* kCondition1 = "cond_i_commutation";
inline constexpr const char* kCondition2 = "cond_ii_output_coupling";
inline constexpr const char* kCondition3 = "cond_iii_feedthrough";
}  // namespace residual_names

/// Checks the three realizability conditions for a proposed (B1, D1):
///   (i)   i A Theta + i Theta A^T + [B1 B] T_w [B1 B]^T = 0
///   (ii)  first n_y columns of [B1 B] equal Theta C^T diag(J)
///   (iii) D1 = [I 0]
/// B1 must be n x n_v and D1 n_y x n_v with n_v even and >= n_y; otherwise
/// DimensionError.
ResidualReport check_physical_realizability(const LtiSystem& sys, const RealMatrix& B1,
                                            const RealMatrix& D1,
                                            const TolerancePolicy& tol = {});

}  // namespace qrealize
