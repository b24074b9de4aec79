#pragma once

// Seeded random systems for property and acceptance tests.

#include "qrealize/canonical.hpp"
#include "qrealize/realizability.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qrealize::testing {

inline double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

inline RealMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RealMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = uniform(rng);
  return m;
}

inline ComplexMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  return random_matrix(rng, rows, cols).cast<Complex>() +
         Complex(0.0, 1.0) * random_matrix(rng, rows, cols).cast<Complex>();
}

inline RealMatrix random_symmetric(std::mt19937_64& rng, int n) {
  const RealMatrix g = random_matrix(rng, n, n);
  return 0.5 * (g + g.transpose());
}

/// Orthogonal matrix from the QR factor of a Gaussian-like matrix.
inline RealMatrix random_orthogonal(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<RealMatrix> qr(random_matrix(rng, n, n));
  return qr.householderQ() * RealMatrix::Identity(n, n);
}

/// Generic (A, B, C) with entries uniform in [-1, 1).
inline LtiSystem random_system(std::mt19937_64& rng, int n, int n_u) {
  return LtiSystem{random_matrix(rng, n, n), random_matrix(rng, n, n_u),
                   random_matrix(rng, n_u, n)};
}

/// Random (B, C) with A chosen so that S~ equals a random skew matrix of rank
/// target_rank: with X = Theta B Theta B^T Theta - C^T Theta C and K = (X - T)/2,
/// A = -Theta (K + Sym) gives Theta A + A^T Theta = 2K and hence S~ = T.
inline LtiSystem system_with_rank(std::mt19937_64& rng, int n, int n_u, int target_rank) {
  const RealMatrix theta = build_theta(n);
  LtiSystem sys;
  sys.B = random_matrix(rng, n, n_u);
  sys.C = random_matrix(rng, n_u, n);
  RealMatrix target = RealMatrix::Zero(n, n);
  if (target_rank > 0) {
    const RealMatrix g = random_matrix(rng, n, target_rank);
    target = g * build_theta(target_rank) * g.transpose();
  }
  const RealMatrix x = theta * sys.B * build_theta(n_u) * sys.B.transpose() * theta -
                       sys.C.transpose() * build_theta(n_u) * sys.C;
  const RealMatrix k = 0.5 * (x - target);
  sys.A = -theta * (k + random_symmetric(rng, n));
  return sys;
}

struct CorpusEntry {
  LtiSystem system;
  int designed_rank = -1;  ///< -1 for generic draws
};

/// 100 systems, 20 for each n in {2, 4, 6, 8, 10}. Every fourth draw is
/// generic; the rest have S~ of a designed rank in {0, 2, ..., n}.
inline std::vector<CorpusEntry> corpus(std::uint64_t seed = 20240517) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (int n : {2, 4, 6, 8, 10}) {
    for (int k = 0; k < 20; ++k) {
      const int n_u = 2 * (1 + static_cast<int>(rng() % 3));
      if (k % 4 == 0) {
        out.push_back({random_system(rng, n, n_u), -1});
      } else {
        const int rank = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 1));
        out.push_back({system_with_rank(rng, n, n_u, rank), rank});
      }
    }
  }
  return out;
}

}  // namespace qrealize::testing
