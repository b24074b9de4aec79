#include "qrealize/canonical.hpp"

#include "qrealize/error.hpp"

#include <string>

namespace qrealize {

namespace {

void require_even(int size, const char* what, bool allow_zero) {
  if (size % 2 != 0 || size < 0 || (!allow_zero && size == 0)) {
    throw DimensionError(std::string(what) + ": size must be even and " +
                         (allow_zero ? "nonnegative" : "positive") + ", got " +
                         std::to_string(size));
  }
}

}  // namespace

RealMatrix build_theta(int k) {
  require_even(k, "build_theta", false);
  RealMatrix theta = RealMatrix::Zero(k, k);
  for (int b = 0; b < k; b += 2) {
    theta(b, b + 1) = 1.0;
    theta(b + 1, b) = -1.0;
  }
  return theta;
}

RealMatrix build_P(int size) {
  require_even(size, "build_P", true);
  const int half = size / 2;
  RealMatrix p = RealMatrix::Zero(size, size);
  for (int k = 0; k < half; ++k) {
    p(k, 2 * k) = 1.0;             // (P a)_k = a_{2k+1} in 1-based terms
    p(half + k, 2 * k + 1) = 1.0;  // (P a)_{m+k} = a_{2k+2}
  }
  return p;
}

ComplexMatrix build_M() {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5i, 0.5, -0.5i;
  return m;
}

ComplexMatrix build_diag_M(int size) {
  require_even(size, "build_diag_M", true);
  const ComplexMatrix m = build_M();
  ComplexMatrix d = ComplexMatrix::Zero(size, size);
  for (int b = 0; b < size; b += 2) d.block(b, b, 2, 2) = m;
  return d;
}

ComplexMatrix build_gamma(int size) {
  require_even(size, "build_gamma", true);
  return build_P(size).cast<Complex>() * build_diag_M(size);
}

RealMatrix build_sigma(int rows, int cols) {
  if (rows < 0 || cols < rows) {
    throw DimensionError("build_sigma: need 0 <= rows <= cols");
  }
  RealMatrix s = RealMatrix::Zero(rows, cols);
  s.leftCols(rows).setIdentity();
  return s;
}

RealMatrix permuted_symplectic_form(int size) {
  require_even(size, "permuted_symplectic_form", false);
  const int half = size / 2;
  RealMatrix block = RealMatrix::Zero(size, size);
  block.topRightCorner(half, half).setIdentity();
  block.bottomLeftCorner(half, half) = -RealMatrix::Identity(half, half);
  const RealMatrix p = build_P(size);
  return p.transpose() * block * p;
}

CanonicalStructure canonical_structure(int n, int n_u, int n_y, int n_v) {
  require_even(n, "canonical_structure (n)", false);
  require_even(n_u, "canonical_structure (n_u)", false);
  require_even(n_y, "canonical_structure (n_y)", false);
  require_even(n_v, "canonical_structure (n_v)", false);
  if (n_v < n_y) throw DimensionError("canonical_structure: n_v must be at least n_y");

  CanonicalStructure cs;
  cs.theta_n = build_theta(n);
  cs.theta_nu = build_theta(n_u);
  cs.theta_ny = build_theta(n_y);
  cs.P_ny = build_P(n_y);
  cs.P_nu = build_P(n_u);
  cs.M = build_M();
  cs.gamma = build_gamma(n_v + n_u);
  cs.sigma_ny = build_sigma(n_y / 2, (n_v + n_u) / 2);
  return cs;
}

NoiseItoStructure noise_ito_structure(int n_v, int n_u) {
  require_even(n_v, "noise_ito_structure (n_v)", true);
  require_even(n_u, "noise_ito_structure (n_u)", true);
  using namespace std::complex_literals;
  auto vacuum = [](int k) -> ComplexMatrix {
    if (k == 0) return ComplexMatrix(0, 0);
    return ComplexMatrix::Identity(k, k) + 1i * build_theta(k).cast<Complex>();
  };

  NoiseItoStructure s;
  s.F_v = vacuum(n_v);
  s.F_u = vacuum(n_u);
  s.T_w = ComplexMatrix::Zero(n_v + n_u, n_v + n_u);
  s.T_w.topLeftCorner(n_v, n_v) = 0.5 * (s.F_v - s.F_v.transpose());
  s.T_w.bottomRightCorner(n_u, n_u) = 0.5 * (s.F_u - s.F_u.transpose());
  return s;
}

}  // namespace qrealize
