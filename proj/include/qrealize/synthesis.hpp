#pragma once

#include "qrealize/error.hpp"
#include "qrealize/realizability.hpp"

#include <cstdint>
#include <memory>

namespace qrealize {

/// Open quantum harmonic oscillator data realizing a given (A, B, C):
/// Hamiltonian H = 1/2 x^T R x, coupling L = Lambda x with
/// Lambda = [Lambda_b0; Lambda_b1; Lambda_b2], and the extra-noise matrices.
struct Realization {
  RealMatrix R;
  ComplexMatrix Lambda_b0;   ///< n_y/2 x n, output coupling
  ComplexMatrix Lambda_b1;   ///< (n_v - n_u)/2 x n, extra-noise coupling
  ComplexMatrix Lambda_b2;   ///< n_u/2 x n, input coupling
  RealMatrix B1;             ///< n x n_v, [B11 B12]
  RealMatrix D1;             ///< n_y x n_v, [I 0]
  int n_v = 0;

  RealMatrix Xi1;            ///< real symmetric part chosen for Lambda_b1^dagger Lambda_b1
  ComplexMatrix Xi2;         ///< Xi1 + (i/4) S~

  ComplexMatrix Lambda() const;
};

/// R = -1/4 (Theta A + A^T Theta^T), exactly symmetrized.
RealMatrix build_R(const LtiSystem& sys);

/// Lambda_b0 = (1/2 C^T P^T [I; iI])^T.
ComplexMatrix build_Lambda_b0(const LtiSystem& sys);

/// Lambda_b2 = -i [I 0] P diag(M) B^T Theta.
ComplexMatrix build_Lambda_b2(const LtiSystem& sys);

/// Xi1 = U^dagger |D| U from the eigen-decomposition of S. The imaginary part
/// must vanish within symmetry_tol (relative to ||S||); it is then dropped
/// and the result exactly symmetrized. Otherwise NumericalError.
RealMatrix build_Xi1(const SkewReport& skew);

/// Xi2 = Xi1 + (i/4) S~. Throws FactorizationError unless Xi2 is PSD and has
/// numerical rank r/2.
ComplexMatrix build_Xi2(const SkewReport& skew, const RealMatrix& xi1);

/// r/2 x n factor of Xi2. skew supplies r and the reference scale.
ComplexMatrix build_Lambda_b1(const ComplexMatrix& xi2, const SkewReport& skew);

/// Result of evaluating the complex B12 formula before its imaginary part is dropped.
struct B1Construction {
  RealMatrix B1;
  double imag_norm = 0.0;   ///< ||Im(B12 formula)||_F
  double scale = 0.0;       ///< ||B12 formula||_F
};

/// B1 = [Theta C^T diag(J) | 2i Theta [-Lambda_b1^dagger  Lambda_b1^T] P diag(M)].
/// Throws NumericalError if the imaginary part of B12 exceeds residual_tol
/// relative to its norm.
B1Construction build_B1(const LtiSystem& sys, const ComplexMatrix& lambda_b1,
                        const TolerancePolicy& tol = {});

/// Reconstructions from (R, Lambda) through the oscillator equations.
RealMatrix reconstruct_A(const RealMatrix& R, const ComplexMatrix& lambda);
ComplexMatrix reconstruct_B1B(const ComplexMatrix& lambda);
RealMatrix reconstruct_C(const ComplexMatrix& lambda, int n_y);

/// Im(L^dagger L).
RealMatrix im_gram(const ComplexMatrix& lambda);

struct SynthesisResult {
  Realization realization;
  SkewReport skew;
  ResidualReport report;
};

/// Runs the full construction and attaches every identity residual without
/// throwing on residual failure. Intermediate numerical errors (non-real
/// Xi1, wrong rank of Xi2, non-real B12) still throw.
SynthesisResult assemble_realization(const LtiSystem& sys, const TolerancePolicy& tol = {});

/// Carries the full result when any residual failed.
class SynthesisError : public Error {
 public:
  SynthesisError(const std::string& what, SynthesisResult result)
      : Error(what), result_(std::make_shared<SynthesisResult>(std::move(result))) {}
  const SynthesisResult& result() const { return *result_; }

 private:
  std::shared_ptr<const SynthesisResult> result_;
};

/// assemble_realization, throwing SynthesisError unless every residual passes.
SynthesisResult synthesize_realization(const LtiSystem& sys, const TolerancePolicy& tol = {});

/// Randomized check that rank(Xi1 + i S~/4) >= r/2 for arbitrary real symmetric Xi1.
struct MinimalityCertificate {
  int r = 0;
  int trials = 0;                ///< random candidates evaluated (excludes the two fixed ones)
  int min_observed_rank = 0;     ///< over random, constructive and zero candidates
  int constructive_rank = 0;     ///< rank at Xi1 = U^dagger |D| U
  int zero_candidate_rank = 0;   ///< rank at Xi1 = 0
  bool routes_agree = true;      ///< direct rank == real-embedding rank on every candidate
  bool lower_bound_held = false; ///< min_observed_rank >= r/2
};

/// Evaluates `trials` random symmetric Xi1 (entry scales cycling through
/// {1e-2, 1, 1e2} * ||S~||) plus Xi1 = U^dagger |D| U and Xi1 = 0. Each trial
/// draws from its own generator seeded by (seed, trial index).
/// Throws ContractError for trials < 1.
MinimalityCertificate minimality_certificate(const LtiSystem& sys, int trials,
                                             std::uint64_t seed,
                                             const TolerancePolicy& tol = {});

}  // namespace qrealize
