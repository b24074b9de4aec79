#include "qrealize/linalg.hpp"

#include "qrealize/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qrealize {

void TolerancePolicy::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(rank_rel_tol) || !ok(residual_tol) || !ok(symmetry_tol)) {
    throw ContractError("tolerances must be finite and strictly positive");
  }
}

bool is_symmetric(const RealMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x - x.transpose()).norm() <= tol * x.norm();
}

bool is_skew_symmetric(const RealMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x + x.transpose()).norm() <= tol * x.norm();
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x - x.adjoint()).norm() <= tol * x.norm();
}

bool is_psd(const ComplexMatrix& x, double tol) {
  if (!is_hermitian(x, tol)) return false;
  if (x.size() == 0) return true;
  const ComplexMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol * x.norm();
}

HermitianEig hermitian_eig(const ComplexMatrix& h, const TolerancePolicy& tol) {
  if (!is_hermitian(h, tol.symmetry_tol)) {
    throw ContractError("hermitian_eig: input is not Hermitian");
  }
  const Eigen::Index n = h.rows();
  HermitianEig out;
  if (n == 0) {
    out.U.resize(0, 0);
    out.D.resize(0);
    return out;
  }

  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver did not converge");
  }
  const RealVector& values = solver.eigenvalues();
  const ComplexMatrix& vectors = solver.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });

  out.D.resize(n);
  out.U.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    Eigen::VectorXcd v = vectors.col(src);

    // Phase convention: first entry of (numerically) maximal modulus is real positive.
    const double vmax = v.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(v(pivot)) < vmax * (1.0 - 1e-9)) ++pivot;
    const Complex phase = std::conj(v(pivot)) / std::abs(v(pivot));
    v *= phase;

    out.D(k) = values(src);
    out.U.row(k) = v.adjoint();
  }
  return out;
}

namespace {

int count_above(const RealVector& sigma, double rel_tol, double reference_scale) {
  if (sigma.size() == 0) return 0;
  const double cutoff = rel_tol * std::max(sigma.maxCoeff(), reference_scale);
  return static_cast<int>((sigma.array() > cutoff).count());
}

}  // namespace

int numerical_rank(const RealMatrix& m, const TolerancePolicy& tol, double reference_scale) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return count_above(svd.singularValues(), tol.rank_rel_tol, reference_scale);
}

int numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol, double reference_scale) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return count_above(svd.singularValues(), tol.rank_rel_tol, reference_scale);
}

RealVector jacobi_singular_values(const RealMatrix& m) {
  // Work on the orientation with fewer columns; singular values are shared.
  RealMatrix g = m.rows() >= m.cols() ? m : RealMatrix(m.transpose());
  const Eigen::Index cols = g.cols();
  if (cols == 0 || g.rows() == 0) return RealVector(0);

  constexpr int kMaxSweeps = 80;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < cols; ++p) {
      for (Eigen::Index q = p + 1; q < cols; ++q) {
        const double alpha = g.col(p).squaredNorm();
        const double beta = g.col(q).squaredNorm();
        const double gamma = g.col(p).dot(g.col(q));
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const RealVector gp = g.col(p);
        g.col(p) = c * gp - s * g.col(q);
        g.col(q) = s * gp + c * g.col(q);
      }
    }
    if (!rotated) break;
  }

  RealVector sigma(cols);
  for (Eigen::Index j = 0; j < cols; ++j) sigma(j) = g.col(j).norm();
  std::sort(sigma.data(), sigma.data() + cols, std::greater<>());
  return sigma;
}

int complex_rank_via_real_embedding(const RealMatrix& re, const RealMatrix& im,
                                    const TolerancePolicy& tol, double reference_scale) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw DimensionError("complex_rank_via_real_embedding: real and imaginary parts differ in shape");
  }
  const Eigen::Index r = re.rows();
  const Eigen::Index c = re.cols();
  RealMatrix embed(2 * r, 2 * c);
  embed << re, im, -im, re;
  // Each singular value of re + i*im appears twice in the embedding.
  const RealVector sigma = jacobi_singular_values(embed);
  return count_above(sigma, tol.rank_rel_tol, reference_scale) / 2;
}

ComplexMatrix psd_low_rank_factor(const ComplexMatrix& xi2, int k, const TolerancePolicy& tol,
                                  double reference_scale) {
  if (xi2.rows() != xi2.cols()) {
    throw FactorizationError("psd_low_rank_factor: matrix is not square");
  }
  const Eigen::Index n = xi2.rows();
  if (k < 0 || k > n) {
    throw FactorizationError("psd_low_rank_factor: requested rank out of range");
  }
  if (!is_hermitian(xi2, tol.symmetry_tol)) {
    throw FactorizationError("psd_low_rank_factor: matrix is not Hermitian");
  }
  if (n == 0) return ComplexMatrix(0, 0);

  const HermitianEig eig = hermitian_eig(xi2, tol);
  const double top = eig.D.cwiseAbs().maxCoeff();
  const double scale = std::max(top, reference_scale);
  if (eig.D(n - 1) < -tol.symmetry_tol * scale) {
    throw FactorizationError("psd_low_rank_factor: matrix has a negative eigenvalue");
  }
  const int rank = static_cast<int>((eig.D.array() > tol.rank_rel_tol * scale).count());
  if (rank != k) {
    throw FactorizationError("psd_low_rank_factor: numerical rank " + std::to_string(rank) +
                             " does not match requested " + std::to_string(k));
  }

  ComplexMatrix factor(k, n);
  for (int j = 0; j < k; ++j) {
    factor.row(j) = std::sqrt(eig.D(j)) * eig.U.row(j);
  }
  return factor;
}

double relative_residual(double diff_norm, double scale) {
  return scale > 0.0 ? diff_norm / scale : diff_norm;
}

}  // namespace qrealize
