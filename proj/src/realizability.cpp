#include "qrealize/realizability.hpp"

#include "qrealize/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrealize {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

bool even_positive(Eigen::Index k) { return k >= 2 && k % 2 == 0; }

}  // namespace

LtiSystem validate_system(LtiSystem sys) {
  const Eigen::Index n = sys.A.rows();
  require(sys.A.cols() == n, "A must be square, got " + std::to_string(n) + "x" +
                                 std::to_string(sys.A.cols()));
  require(even_positive(n), "n must be even and at least 2, got " + std::to_string(n));
  require(sys.B.rows() == n, "B must have n = " + std::to_string(n) + " rows, got " +
                                 std::to_string(sys.B.rows()));
  require(sys.C.cols() == n, "C must have n = " + std::to_string(n) + " columns, got " +
                                 std::to_string(sys.C.cols()));
  require(even_positive(sys.B.cols()),
          "n_u must be even and at least 2, got " + std::to_string(sys.B.cols()));
  require(even_positive(sys.C.rows()),
          "n_y must be even and at least 2, got " + std::to_string(sys.C.rows()));
  require(sys.C.rows() == sys.B.cols(), "n_y must equal n_u, got n_y = " +
                                            std::to_string(sys.C.rows()) + ", n_u = " +
                                            std::to_string(sys.B.cols()));
  require(sys.A.allFinite() && sys.B.allFinite() && sys.C.allFinite(),
          "entries of A, B, C must be finite");
  return sys;
}

SkewReport compute_S_tilde(const LtiSystem& sys, const TolerancePolicy& tol) {
  const RealMatrix theta = build_theta(sys.n());
  const RealMatrix theta_u = build_theta(sys.n_u());
  const RealMatrix theta_y = build_theta(sys.n_y());

  const RealMatrix input_term = theta * sys.B * theta_u * sys.B.transpose() * theta;
  const RealMatrix left_term = sys.A.transpose() * theta;
  const RealMatrix right_term = theta * sys.A;
  const RealMatrix output_term = sys.C.transpose() * theta_y * sys.C;
  const RealMatrix raw = input_term - left_term - right_term - output_term;

  SkewReport rep;
  rep.tol = tol;
  rep.term_scale = input_term.norm() + left_term.norm() + right_term.norm() + output_term.norm();
  rep.skew_defect = 0.5 * (raw + raw.transpose()).norm();
  if (rep.skew_defect > tol.symmetry_tol * rep.term_scale) {
    throw NumericalError("compute_S_tilde: result is not skew-symmetric (defect " +
                         std::to_string(rep.skew_defect) + ")");
  }
  rep.S_tilde = 0.5 * (raw - raw.transpose());
  rep.S = Complex(0.0, 0.25) * rep.S_tilde.cast<Complex>();
  rep.eig = hermitian_eig(rep.S, tol);
  rep.rank_r = numerical_rank(rep.S_tilde, tol, rep.term_scale);
  if (rep.rank_r % 2 != 0) {
    throw NumericalError("compute_S_tilde: odd numerical rank " + std::to_string(rep.rank_r) +
                         " of a skew-symmetric matrix; adjust the rank tolerance");
  }
  return rep;
}

NoiseCount minimal_noise_count(const LtiSystem& sys, const SkewReport& skew) {
  return NoiseCount{skew.rank_r, sys.n_u() + skew.rank_r};
}

NoiseCount minimal_noise_count(const LtiSystem& sys, const TolerancePolicy& tol) {
  return minimal_noise_count(sys, compute_S_tilde(sys, tol));
}

int least_eigenvalue_multiplicity(const RealVector& values, double gap) {
  if (values.size() == 0) return 0;
  const double least = values.minCoeff();
  return static_cast<int>((values.array() <= least + gap).count());
}

int theorem2_noise_count(const LtiSystem& sys, const SkewReport& skew) {
  // i S~ = 4 S, so its spectrum is the scaled spectrum of S.
  const RealVector values = 4.0 * skew.eigenvalues();
  const double top = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  const double gap = 1e-7 * std::max(top, skew.term_scale);
  const int n_lambda = least_eigenvalue_multiplicity(values, gap);
  return sys.n_u() + 2 * (sys.n() - n_lambda);
}

int theorem2_noise_count(const LtiSystem& sys, const TolerancePolicy& tol) {
  return theorem2_noise_count(sys, compute_S_tilde(sys, tol));
}

void ResidualReport::add(std::string name, double absolute, double scale, double tolerance) {
  Residual r;
  r.name = std::move(name);
  r.absolute = absolute;
  r.scale = scale;
  r.value = relative_residual(absolute, scale);
  r.tolerance = tolerance;
  r.pass = std::isfinite(r.value) && r.value <= tolerance;
  entries.push_back(std::move(r));
}

bool ResidualReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Residual& r) { return r.pass; });
}

const Residual* ResidualReport::find(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const Residual& r) { return r.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

ResidualReport check_physical_realizability(const LtiSystem& sys, const RealMatrix& B1,
                                            const RealMatrix& D1, const TolerancePolicy& tol) {
  const int n = sys.n();
  const int n_u = sys.n_u();
  const int n_y = sys.n_y();
  const auto n_v = static_cast<int>(B1.cols());
  if (B1.rows() != n) {
    throw DimensionError("B1 must have n = " + std::to_string(n) + " rows, got " +
                         std::to_string(B1.rows()));
  }
  if (n_v % 2 != 0 || n_v < n_y) {
    throw DimensionError("B1 must have an even number of columns n_v >= n_y = " +
                         std::to_string(n_y) + ", got " + std::to_string(n_v));
  }
  if (D1.rows() != n_y || D1.cols() != n_v) {
    throw DimensionError("D1 must be " + std::to_string(n_y) + "x" + std::to_string(n_v) +
                         ", got " + std::to_string(D1.rows()) + "x" + std::to_string(D1.cols()));
  }

  const RealMatrix theta = build_theta(n);
  const NoiseItoStructure ito = noise_ito_structure(n_v, n_u);

  ComplexMatrix joint(n, n_v + n_u);
  joint << B1.cast<Complex>(), sys.B.cast<Complex>();

  const Complex i(0.0, 1.0);
  const ComplexMatrix drift_left = i * (sys.A * theta).cast<Complex>();
  const ComplexMatrix drift_right = i * (theta * sys.A.transpose()).cast<Complex>();
  const ComplexMatrix noise_term = joint * ito.T_w * joint.transpose();
  const ComplexMatrix lhs1 = drift_left + drift_right + noise_term;
  // T_w is block diagonal; the B1 and B halves may cancel each other.
  const double noise_scale =
      (joint.leftCols(n_v) * ito.T_w.topLeftCorner(n_v, n_v) * joint.leftCols(n_v).transpose()).norm() +
      (joint.rightCols(n_u) * ito.T_w.bottomRightCorner(n_u, n_u) * joint.rightCols(n_u).transpose()).norm();

  ResidualReport report;
  report.add(residual_names::kCondition1, lhs1.norm(),
             drift_left.norm() + drift_right.norm() + noise_scale, tol.residual_tol);

  const RealMatrix required = theta * sys.C.transpose() * build_theta(n_y);
  const RealMatrix leading = B1.leftCols(n_y);
  report.add(residual_names::kCondition2, (leading - required).norm(),
             std::max(leading.norm(), required.norm()), tol.residual_tol);

  const RealMatrix expected_d1 = build_sigma(n_y, n_v);
  report.add(residual_names::kCondition3, (D1 - expected_d1).norm(), expected_d1.norm(),
             tol.residual_tol);
  return report;
}

}  // namespace qrealize
