#include <gtest/gtest.h>

#include "qrealize/error.hpp"
#include "qrealize/fixtures.hpp"
#include "qrealize/synthesis.hpp"
#include "support/corpus.hpp"

using namespace qrealize;
using namespace qrealize::testing;

namespace {

RealMatrix J() {
  RealMatrix j(2, 2);
  j << 0, 1, -1, 0;
  return j;
}

}  // namespace

TEST(BuildR, Examples) {
  EXPECT_TRUE(build_R(fixtures::trivial_example()).isApprox(0.5 * RealMatrix::Identity(2, 2)));
  EXPECT_EQ(build_R(fixtures::small_example()), RealMatrix::Zero(2, 2));
  const RealMatrix r = build_R(fixtures::paper_example());
  EXPECT_LT((r - r.transpose()).norm(), 1e-14);
}

TEST(BuildR, IsSymmetricPartOfHalfThetaInverseA) {
  for (const CorpusEntry& e : corpus()) {
    const RealMatrix theta = build_theta(e.system.n());
    const RealMatrix half = 0.5 * theta.transpose() * e.system.A;  // Theta^{-1} = Theta^T
    const RealMatrix sym = 0.5 * (half + half.transpose());
    EXPECT_LE((build_R(e.system) - sym).norm(), 1e-14 * std::max(1.0, half.norm()));
  }
}

TEST(BuildLambdaB0, Examples) {
  LtiSystem zero_c = fixtures::paper_example();
  zero_c.C.setZero();
  EXPECT_EQ(build_Lambda_b0(zero_c), ComplexMatrix::Zero(1, 4));

  const ComplexMatrix l = build_Lambda_b0(fixtures::small_example());
  ASSERT_EQ(l.rows(), 1);
  ASSERT_EQ(l.cols(), 2);
  EXPECT_EQ(l(0, 0), Complex(0.5, 0));
  EXPECT_EQ(l(0, 1), Complex(0, 0.5));

  const LtiSystem sys = fixtures::paper_example();
  EXPECT_LE((reconstruct_C(build_Lambda_b0(sys), 2) - sys.C).norm(), 1e-10);
}

TEST(BuildLambdaB2, Examples) {
  LtiSystem zero_b = fixtures::paper_example();
  zero_b.B.setZero();
  EXPECT_EQ(build_Lambda_b2(zero_b), ComplexMatrix::Zero(1, 4));

  const ComplexMatrix l = build_Lambda_b2(fixtures::small_example());
  EXPECT_LE((im_gram(l) - 0.25 * J()).norm(), 1e-15);

  const LtiSystem sys = fixtures::paper_example();
  const RealMatrix theta = build_theta(4);
  const RealMatrix expected = -0.25 * theta * sys.B * build_theta(2) * sys.B.transpose() * theta;
  EXPECT_LE((im_gram(build_Lambda_b2(sys)) - expected).norm(), 1e-10);
}

TEST(BuildXi1, Examples) {
  EXPECT_EQ(build_Xi1(compute_S_tilde(fixtures::trivial_example())), RealMatrix::Zero(2, 2));

  const RealMatrix small = build_Xi1(compute_S_tilde(fixtures::small_example()));
  EXPECT_LE((small - 0.5 * RealMatrix::Identity(2, 2)).norm(), 1e-15);

  const SkewReport skew = compute_S_tilde(fixtures::paper_example());
  const RealMatrix xi1 = build_Xi1(skew);
  EXPECT_EQ(xi1, xi1.transpose());
  EXPECT_TRUE(is_psd(xi1.cast<Complex>(), 1e-12));
  EXPECT_EQ(numerical_rank(xi1), 4);
  const ComplexMatrix s2 = skew.S * skew.S;
  EXPECT_LE((xi1 * xi1 - s2.real()).norm(), 1e-12 * s2.norm());
}

TEST(BuildXi2, Examples) {
  const SkewReport triv = compute_S_tilde(fixtures::trivial_example());
  const ComplexMatrix z = build_Xi2(triv, build_Xi1(triv));
  EXPECT_EQ(z, ComplexMatrix::Zero(2, 2));

  const SkewReport small = compute_S_tilde(fixtures::small_example());
  EXPECT_EQ(numerical_rank(build_Xi2(small, build_Xi1(small))), 1);

  const SkewReport paper = compute_S_tilde(fixtures::paper_example());
  const ComplexMatrix xi2 = build_Xi2(paper, build_Xi1(paper));
  EXPECT_EQ(numerical_rank(xi2), 2);
  EXPECT_TRUE(is_psd(xi2, 1e-12));
}

TEST(BuildXi2, RejectsChoiceThatIsNotPsd) {
  const SkewReport paper = compute_S_tilde(fixtures::paper_example());
  EXPECT_THROW(build_Xi2(paper, RealMatrix::Zero(4, 4)), FactorizationError);
}

TEST(BuildXi2, RejectsChoiceWithTooMuchRank) {
  const SkewReport paper = compute_S_tilde(fixtures::paper_example());
  const RealMatrix padded = build_Xi1(paper) + RealMatrix::Identity(4, 4);
  EXPECT_THROW(build_Xi2(paper, padded), FactorizationError);
}

TEST(BuildLambdaB1, Examples) {
  const SkewReport triv = compute_S_tilde(fixtures::trivial_example());
  const ComplexMatrix empty = build_Lambda_b1(ComplexMatrix::Zero(2, 2), triv);
  EXPECT_EQ(empty.rows(), 0);
  EXPECT_EQ(empty.cols(), 2);

  const SkewReport small = compute_S_tilde(fixtures::small_example());
  const ComplexMatrix xs = build_Xi2(small, build_Xi1(small));
  const ComplexMatrix ls = build_Lambda_b1(xs, small);
  EXPECT_EQ(ls.rows(), 1);
  EXPECT_LE((ls.adjoint() * ls - xs).norm(), 1e-10);

  const SkewReport paper = compute_S_tilde(fixtures::paper_example());
  const ComplexMatrix lp = build_Lambda_b1(build_Xi2(paper, build_Xi1(paper)), paper);
  EXPECT_EQ(lp.rows(), 2);
  EXPECT_EQ(lp.cols(), 4);
}

TEST(BuildB1, Shapes) {
  const LtiSystem triv = fixtures::trivial_example();
  const B1Construction bt = build_B1(triv, ComplexMatrix(0, 2));
  EXPECT_EQ(bt.B1, RealMatrix::Zero(2, 2));

  const LtiSystem small = fixtures::small_example();
  const SkewReport ss = compute_S_tilde(small);
  const B1Construction bs = build_B1(small, build_Lambda_b1(build_Xi2(ss, build_Xi1(ss)), ss));
  EXPECT_EQ(bs.B1.cols(), 4);
  EXPECT_EQ(RealMatrix(bs.B1.leftCols(2)), RealMatrix(-RealMatrix::Identity(2, 2)));
  EXPECT_LE(bs.imag_norm, 1e-15 * bs.scale);

  const LtiSystem paper = fixtures::paper_example();
  const SkewReport sp = compute_S_tilde(paper);
  const B1Construction bp = build_B1(paper, build_Lambda_b1(build_Xi2(sp, build_Xi1(sp)), sp));
  EXPECT_EQ(bp.B1.rows(), 4);
  EXPECT_EQ(bp.B1.cols(), 6);
}

TEST(BuildB1, RealForArbitraryCouplingRows) {
  // Each coupling row maps to the column pair (-2 Theta Im l^T, 2 Theta Re l^T).
  std::mt19937_64 rng(23);
  const LtiSystem paper = fixtures::paper_example();
  const ComplexMatrix l = random_complex(rng, 3, 4);
  const B1Construction b = build_B1(paper, l);
  EXPECT_LE(b.imag_norm, 1e-15 * b.scale);
  const RealMatrix theta = build_theta(4);
  EXPECT_LE((b.B1.col(2) + 2.0 * theta * l.row(0).imag().transpose()).norm(), 1e-14);
  EXPECT_LE((b.B1.col(3) - 2.0 * theta * l.row(0).real().transpose()).norm(), 1e-14);
  EXPECT_THROW(build_B1(paper, ComplexMatrix::Zero(1, 3)), DimensionError);
}

TEST(SynthesizeRealization, Fixtures) {
  struct Case {
    LtiSystem sys;
    int n_v;
  };
  for (const Case& c : {Case{fixtures::paper_example(), 6}, Case{fixtures::trivial_example(), 2},
                        Case{fixtures::small_example(), 4}}) {
    const SynthesisResult res = synthesize_realization(c.sys);
    EXPECT_EQ(res.realization.n_v, c.n_v);
    EXPECT_EQ(res.realization.B1.cols(), c.n_v);
    EXPECT_EQ(res.realization.D1, build_sigma(c.sys.n_y(), c.n_v));
    EXPECT_EQ(res.realization.Lambda_b1.rows(), (c.n_v - c.sys.n_u()) / 2);
    for (const Residual& r : res.report.entries) EXPECT_TRUE(r.pass) << r.name << " " << r.value;
  }
}

TEST(SynthesizeRealization, TrivialPathRebuildsJ) {
  const SynthesisResult res = synthesize_realization(fixtures::trivial_example());
  EXPECT_EQ(res.realization.B1, RealMatrix::Zero(2, 2));
  EXPECT_LE((reconstruct_A(res.realization.R, res.realization.Lambda()) - J()).norm(), 1e-15);
}

TEST(SynthesizeRealization, ReconstructsInputMatrixB) {
  const LtiSystem sys = fixtures::paper_example();
  const SynthesisResult res = synthesize_realization(sys);
  const ComplexMatrix joint = reconstruct_B1B(res.realization.Lambda());
  EXPECT_LE((joint.rightCols(2) - sys.B.cast<Complex>()).norm(), 1e-12);
  EXPECT_LE(joint.imag().norm(), 1e-15);
}

TEST(SynthesizeRealization, RaisesWithReportWhenToleranceIsImpossible) {
  TolerancePolicy tight;
  tight.residual_tol = 1e-300;
  try {
    synthesize_realization(fixtures::paper_example(), tight);
    FAIL() << "expected SynthesisError";
  } catch (const SynthesisError& e) {
    EXPECT_FALSE(e.result().report.all_pass());
    EXPECT_EQ(e.result().realization.n_v, 6);
  }
}

TEST(SynthesizeRealization, ProofIdentitiesOnCorpus) {
  for (const CorpusEntry& e : corpus()) {
    const SynthesisResult res = synthesize_realization(e.system);
    for (const char* name : {"im_total", "im_b0", "im_b2", "im_b1"}) {
      EXPECT_LE(res.report.find(name)->value, 1e-9) << name;
    }
    for (const char* name : {"rebuild_A", "rebuild_B1B", "rebuild_C", "rebuild_D"}) {
      EXPECT_LE(res.report.find(name)->value, 1e-8) << name;
    }
    EXPECT_EQ(res.realization.B1.cols(), e.system.n_u() + res.skew.rank_r);
    EXPECT_TRUE(res.report.all_pass());
  }
}

TEST(MinimalityCertificate, Fixtures) {
  const MinimalityCertificate triv = minimality_certificate(fixtures::trivial_example(), 10, 0);
  EXPECT_EQ(triv.r, 0);
  EXPECT_TRUE(triv.lower_bound_held);
  EXPECT_EQ(triv.zero_candidate_rank, 0);

  const MinimalityCertificate small = minimality_certificate(fixtures::small_example(), 200, 0);
  EXPECT_GE(small.min_observed_rank, 1);
  EXPECT_EQ(small.constructive_rank, 1);
  EXPECT_TRUE(small.lower_bound_held);
  EXPECT_TRUE(small.routes_agree);

  const MinimalityCertificate paper = minimality_certificate(fixtures::paper_example(), 200, 0);
  EXPECT_GE(paper.min_observed_rank, 2);
  EXPECT_EQ(paper.constructive_rank, 2);
  EXPECT_EQ(paper.zero_candidate_rank, 4);
  EXPECT_TRUE(paper.lower_bound_held);
  EXPECT_TRUE(paper.routes_agree);
}

TEST(MinimalityCertificate, DeterministicForSeed) {
  const LtiSystem sys = fixtures::paper_example();
  const MinimalityCertificate a = minimality_certificate(sys, 30, 42);
  const MinimalityCertificate b = minimality_certificate(sys, 30, 42);
  EXPECT_EQ(a.min_observed_rank, b.min_observed_rank);
  EXPECT_EQ(a.lower_bound_held, b.lower_bound_held);
  EXPECT_THROW(minimality_certificate(sys, 0, 0), ContractError);
}

TEST(MinimalityCertificate, TightAtConstructiveChoice) {
  for (const CorpusEntry& e : corpus()) {
    const MinimalityCertificate c = minimality_certificate(e.system, 20, 3);
    EXPECT_EQ(2 * c.constructive_rank, c.r);
    EXPECT_EQ(c.min_observed_rank, c.constructive_rank);
    EXPECT_TRUE(c.lower_bound_held);
    EXPECT_TRUE(c.routes_agree);
  }
}
