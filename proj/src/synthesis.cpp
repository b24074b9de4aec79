#include "qrealize/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

namespace qrealize {

namespace {

const Complex kI(0.0, 1.0);

/// Magnitude of S = (i/4) S~ used as the floor for every rank decision on Xi matrices.
double s_scale(const SkewReport& skew) { return skew.term_scale / 4.0; }

ComplexMatrix stack_rows(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  ComplexMatrix out(a.rows() + b.rows() + c.rows(), a.cols());
  out << a, b, c;
  return out;
}

/// 2i Theta [-L^dagger  L^T] P diag(M), the map from coupling rows to noise columns.
ComplexMatrix coupling_to_columns(const ComplexMatrix& lambda) {
  const auto n = static_cast<int>(lambda.cols());
  const auto width = static_cast<int>(2 * lambda.rows());
  ComplexMatrix pair(n, width);
  pair << -lambda.adjoint(), lambda.transpose();
  return 2.0 * kI * build_theta(n).cast<Complex>() * pair * build_gamma(width);
}

}  // namespace

ComplexMatrix Realization::Lambda() const { return stack_rows(Lambda_b0, Lambda_b1, Lambda_b2); }

RealMatrix build_R(const LtiSystem& sys) {
  const RealMatrix theta = build_theta(sys.n());
  const RealMatrix r = -0.25 * (theta * sys.A + sys.A.transpose() * theta.transpose());
  return 0.5 * (r + r.transpose());
}

ComplexMatrix build_Lambda_b0(const LtiSystem& sys) {
  const int half = sys.n_y() / 2;
  ComplexMatrix quad(sys.n_y(), half);
  quad << ComplexMatrix::Identity(half, half), kI * ComplexMatrix::Identity(half, half);
  const ComplexMatrix column_form =
      0.5 * sys.C.transpose().cast<Complex>() * build_P(sys.n_y()).transpose().cast<Complex>() * quad;
  return column_form.transpose();
}

ComplexMatrix build_Lambda_b2(const LtiSystem& sys) {
  const int n_u = sys.n_u();
  const RealMatrix select = build_sigma(n_u / 2, n_u);
  return -kI * select.cast<Complex>() * build_P(n_u).cast<Complex>() * build_diag_M(n_u) *
         (sys.B.transpose() * build_theta(sys.n())).cast<Complex>();
}

RealMatrix build_Xi1(const SkewReport& skew) {
  const ComplexMatrix& u = skew.eig.U;
  const ComplexMatrix xi = u.adjoint() * skew.eig.D.cwiseAbs().cast<Complex>().asDiagonal() * u;
  const double scale = std::max(skew.S.norm(), s_scale(skew));
  const double imag = xi.imag().norm();
  if (imag > skew.tol.symmetry_tol * scale) {
    throw NumericalError("build_Xi1: U^dagger |D| U has imaginary part " + std::to_string(imag));
  }
  const RealMatrix re = xi.real();
  return 0.5 * (re + re.transpose());
}

ComplexMatrix build_Xi2(const SkewReport& skew, const RealMatrix& xi1) {
  const ComplexMatrix xi2 = xi1.cast<Complex>() + skew.S;
  if (xi2.rows() == 0) return xi2;
  const HermitianEig eig = hermitian_eig(xi2, skew.tol);
  const double scale = std::max(eig.D.cwiseAbs().maxCoeff(), s_scale(skew));
  if (eig.D(eig.D.size() - 1) < -skew.tol.symmetry_tol * scale) {
    throw FactorizationError("build_Xi2: Xi1 + S is not positive semidefinite");
  }
  const int rank = numerical_rank(xi2, skew.tol, s_scale(skew));
  if (rank * 2 != skew.rank_r) {
    throw FactorizationError("build_Xi2: rank " + std::to_string(rank) + " is not r/2 = " +
                             std::to_string(skew.rank_r / 2));
  }
  return xi2;
}

ComplexMatrix build_Lambda_b1(const ComplexMatrix& xi2, const SkewReport& skew) {
  return psd_low_rank_factor(xi2, skew.rank_r / 2, skew.tol, s_scale(skew));
}

B1Construction build_B1(const LtiSystem& sys, const ComplexMatrix& lambda_b1,
                        const TolerancePolicy& tol) {
  const int n = sys.n();
  const RealMatrix b11 = build_theta(n) * sys.C.transpose() * build_theta(sys.n_y());

  B1Construction out;
  if (lambda_b1.rows() == 0) {
    out.B1 = b11;
    return out;
  }
  if (lambda_b1.cols() != n) {
    throw DimensionError("build_B1: Lambda_b1 must have n columns");
  }
  const ComplexMatrix b12 = coupling_to_columns(lambda_b1);
  out.imag_norm = b12.imag().norm();
  out.scale = b12.norm();
  if (relative_residual(out.imag_norm, out.scale) > tol.residual_tol) {
    throw NumericalError("build_B1: B12 has imaginary part " + std::to_string(out.imag_norm));
  }
  out.B1.resize(n, b11.cols() + b12.cols());
  out.B1 << b11, b12.real();
  return out;
}

RealMatrix im_gram(const ComplexMatrix& lambda) { return (lambda.adjoint() * lambda).imag(); }

RealMatrix reconstruct_A(const RealMatrix& R, const ComplexMatrix& lambda) {
  return 2.0 * build_theta(static_cast<int>(R.rows())) * (R + im_gram(lambda));
}

ComplexMatrix reconstruct_B1B(const ComplexMatrix& lambda) { return coupling_to_columns(lambda); }

RealMatrix reconstruct_C(const ComplexMatrix& lambda, int n_y) {
  const auto rows = static_cast<int>(lambda.rows());
  const ComplexMatrix sigma = build_sigma(n_y / 2, rows).cast<Complex>();
  ComplexMatrix selector = ComplexMatrix::Zero(n_y, 2 * rows);
  selector.topLeftCorner(n_y / 2, rows) = sigma;
  selector.bottomRightCorner(n_y / 2, rows) = sigma;
  ComplexMatrix quadratures(2 * rows, lambda.cols());
  quadratures << lambda + lambda.conjugate(), -kI * lambda + kI * lambda.conjugate();
  const ComplexMatrix c = build_P(n_y).transpose().cast<Complex>() * selector * quadratures;
  return c.real();
}

SynthesisResult assemble_realization(const LtiSystem& sys, const TolerancePolicy& tol) {
  tol.validate();
  SynthesisResult res;
  res.skew = compute_S_tilde(sys, tol);
  const SkewReport& skew = res.skew;
  Realization& out = res.realization;

  const int n = sys.n();
  const int n_u = sys.n_u();
  const int n_y = sys.n_y();
  out.n_v = n_u + skew.rank_r;

  out.R = build_R(sys);
  out.Lambda_b0 = build_Lambda_b0(sys);
  out.Lambda_b2 = build_Lambda_b2(sys);
  out.Xi1 = build_Xi1(skew);
  out.Xi2 = build_Xi2(skew, out.Xi1);
  out.Lambda_b1 = build_Lambda_b1(out.Xi2, skew);
  const B1Construction b1 = build_B1(sys, out.Lambda_b1, tol);
  out.B1 = b1.B1;
  out.D1 = build_sigma(n_y, out.n_v);
  if (out.B1.cols() != out.n_v) {
    throw NumericalError("synthesis: B1 has " + std::to_string(out.B1.cols()) +
                         " columns, expected n_u + r = " + std::to_string(out.n_v));
  }

  const double rtol = tol.residual_tol;
  ResidualReport& rep = res.report;
  const ComplexMatrix lambda = out.Lambda();
  const RealMatrix theta = build_theta(n);

  // Oscillator equations: rebuild (A, [B1 B], C, [D1 0]) from (R, Lambda).
  const RealMatrix im_all = im_gram(lambda);
  const RealMatrix im_b0 = im_gram(out.Lambda_b0);
  const RealMatrix im_b1 = im_gram(out.Lambda_b1);
  const RealMatrix im_b2 = im_gram(out.Lambda_b2);
  // Scale by the blocks: their sum may cancel (e.g. A = 0).
  const double im_blocks = im_b0.norm() + im_b1.norm() + im_b2.norm();
  const RealMatrix a_rebuilt = reconstruct_A(out.R, lambda);
  rep.add("rebuild_A", (a_rebuilt - sys.A).norm(),
          std::max(sys.A.norm(), 2.0 * (out.R.norm() + im_blocks)), rtol);

  RealMatrix joint(n, out.n_v + n_u);
  joint << out.B1, sys.B;
  const ComplexMatrix joint_rebuilt = reconstruct_B1B(lambda);
  rep.add("rebuild_B1B", (joint_rebuilt - joint.cast<Complex>()).norm(),
          std::max(joint.norm(), joint_rebuilt.norm()), rtol);

  const RealMatrix c_rebuilt = reconstruct_C(lambda, n_y);
  rep.add("rebuild_C", (c_rebuilt - sys.C).norm(), std::max(sys.C.norm(), c_rebuilt.norm()), rtol);

  RealMatrix d_joint = RealMatrix::Zero(n_y, out.n_v + n_u);
  d_joint.leftCols(out.n_v) = out.D1;
  const RealMatrix d_expected = build_sigma(n_y, out.n_v + n_u);
  rep.add("rebuild_D", (d_joint - d_expected).norm(), d_expected.norm(), rtol);

  // Decomposition of Im(Lambda^dagger Lambda) into the three coupling blocks.
  const RealMatrix drift_skew = -0.25 * (theta * sys.A + sys.A.transpose() * theta);
  rep.add("im_total", (im_all - drift_skew).norm(),
          std::max(im_blocks, drift_skew.norm()), rtol);

  const RealMatrix output_part = 0.25 * sys.C.transpose() * build_theta(n_y) * sys.C;
  rep.add("im_b0", (im_b0 - output_part).norm(), std::max(im_b0.norm(), output_part.norm()), rtol);

  const RealMatrix input_part =
      -0.25 * theta * sys.B * build_theta(n_u) * sys.B.transpose() * theta;
  rep.add("im_b2", (im_b2 - input_part).norm(), std::max(im_b2.norm(), input_part.norm()), rtol);

  const RealMatrix quarter = 0.25 * skew.S_tilde;
  rep.add("im_b1", (im_b1 - quarter).norm(), std::max(im_b1.norm(), s_scale(skew)), rtol);

  // Constructive choices of Xi1 and Lambda_b1.
  const ComplexMatrix gram_b1 = out.Lambda_b1.adjoint() * out.Lambda_b1;
  rep.add("xi2_factor", (gram_b1 - out.Xi2).norm(), std::max(out.Xi2.norm(), s_scale(skew)), rtol);
  const ComplexMatrix s_sq = skew.S * skew.S;
  rep.add("xi1_square_root", (out.Xi1 * out.Xi1 - s_sq.real()).norm() + s_sq.imag().norm(),
          std::max(s_sq.norm(), s_scale(skew) * s_scale(skew)), rtol);
  rep.add("b12_real", b1.imag_norm, b1.scale, rtol);

  const ResidualReport conditions = check_physical_realizability(sys, out.B1, out.D1, tol);
  rep.entries.insert(rep.entries.end(), conditions.entries.begin(), conditions.entries.end());
  return res;
}

SynthesisResult synthesize_realization(const LtiSystem& sys, const TolerancePolicy& tol) {
  SynthesisResult res = assemble_realization(sys, tol);
  if (!res.report.all_pass()) {
    std::string failed;
    for (const Residual& r : res.report.entries) {
      if (!r.pass) failed += (failed.empty() ? "" : ", ") + r.name;
    }
    throw SynthesisError("synthesis residuals exceeded tolerance: " + failed, std::move(res));
  }
  return res;
}

namespace {

/// Uniform on [-1, 1) from the raw 64-bit stream; avoids the
/// implementation-defined std distributions so results are portable.
double unit_symmetric(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

std::mt19937_64 trial_generator(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

}  // namespace

MinimalityCertificate minimality_certificate(const LtiSystem& sys, int trials, std::uint64_t seed,
                                             const TolerancePolicy& tol) {
  if (trials < 1) throw ContractError("minimality_certificate: trials must be at least 1");
  tol.validate();
  const SkewReport skew = compute_S_tilde(sys, tol);
  const int n = sys.n();
  const RealMatrix quarter = 0.25 * skew.S_tilde;
  const double ref = s_scale(skew);

  MinimalityCertificate cert;
  cert.r = skew.rank_r;
  cert.trials = trials;

  auto evaluate = [&](const RealMatrix& xi1) {
    const ComplexMatrix m = xi1.cast<Complex>() + kI * quarter.cast<Complex>();
    const int direct = numerical_rank(m, tol, ref);
    const int embedded = complex_rank_via_real_embedding(xi1, quarter, tol, ref);
    if (direct != embedded) cert.routes_agree = false;
    return std::min(direct, embedded);
  };

  cert.constructive_rank = evaluate(build_Xi1(skew));
  cert.zero_candidate_rank = evaluate(RealMatrix::Zero(n, n));
  cert.min_observed_rank = std::min(cert.constructive_rank, cert.zero_candidate_rank);

  constexpr std::array<double, 3> kScales{1e-2, 1.0, 1e2};
  const double base = skew.S_tilde.norm() > 0.0 ? skew.S_tilde.norm() : 1.0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_generator(seed, t);
    RealMatrix g(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) g(i, j) = unit_symmetric(rng);
    const RealMatrix xi1 = kScales[static_cast<std::size_t>(t) % kScales.size()] * base * 0.5 *
                           (g + g.transpose());
    cert.min_observed_rank = std::min(cert.min_observed_rank, evaluate(xi1));
  }

  cert.lower_bound_held = 2 * cert.min_observed_rank >= cert.r;
  return cert;
}

}  // namespace qrealize
