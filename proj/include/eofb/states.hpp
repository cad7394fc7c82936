#pragma once

#include <cstdint>
#include <utility>

#include "eofb/linalg.hpp"

namespace eofb {

/// Pure state of a qubit x d-level system. Coefficients are stored in the
/// order a_11, ..., a_1d, a_21, ..., a_2d (qubit index outer, qudit inner).
struct PureState {
  int d = 0;
  Vector coeffs;  // length 2d, unit norm

  /// Validates the norm (NotNormalized beyond tol) and dimension.
  static PureState validated(int d, Vector coeffs, double tol = 1e-10);

  /// The 2 x d coefficient grid: row i holds a_{i+1,1}, ..., a_{i+1,d}.
  Matrix grid() const;
};

/// Mixed state of a qubit x d-level system.
struct DensityMatrix {
  int d = 0;
  Matrix rho;  // 2d x 2d

  /// Checks Hermiticity within tol, eigenvalues >= -tol, trace within 1e-10
  /// of one. Throws NotHermitian / NotPsd / OutOfRange accordingly.
  static DensityMatrix validated(int d, Matrix rho, double tol = kDefaultTol);

  int dim() const { return 2 * d; }
};

/// Schmidt form of a qubit-qudit pure state. At most two terms because the
/// first factor is a qubit; c1 >= c2 >= 0 with c1^2 + c2^2 = 1.
struct SchmidtData {
  double c1 = 0.0, c2 = 0.0;
  Matrix left;   // 2 x 2, orthonormal columns (qubit side)
  Matrix right;  // d x 2, orthonormal columns (qudit side)

  /// Rebuilds the coefficient grid sum_k c_k u_k v_k^T (2 x d).
  Matrix reconstruct_grid() const;
};

/// Positive weights summing to one.
struct Weights {
  std::vector<double> p;
  static Weights validated(std::vector<double> p, double tol = 1e-12);
};

enum class Subsystem { A, B };

/// Schmidt decomposition via the 2x2 Gram matrix of the coefficient grid.
/// Left-vector phases are fixed by making each one's largest-magnitude
/// component real positive.
SchmidtData schmidt(const PureState& psi);

/// Entanglement entropy in bits: -sum c_k^2 log2 c_k^2, with 0 log 0 = 0.
double entropy_pure(const PureState& psi);

/// Pure-state concurrence 2 c1 c2. Also evaluates the determinant-sum form
/// 2 sqrt(sum_{j>i} |a_1i a_2j - a_1j a_2i|^2) and throws Internal if the two
/// routes disagree beyond 1e-10.
double concurrence_pure(const PureState& psi);

/// Entanglement as a function of concurrence:
/// epsilon(c) = h((1 + sqrt(1 - c^2)) / 2), h the binary entropy in bits.
/// Inputs within 1e-12 outside [0, 1] are clamped; beyond that OutOfRange.
double epsilon(double c);

/// Reduced density matrix of one factor (2x2 for A, dxd for B).
Matrix reduced_density(const PureState& psi, Subsystem subsystem);

/// For an arbitrary dA x dB coefficient grid (unit Frobenius norm), returns
/// lhs = 1 - Tr(rho_A^2) and
/// rhs = 2 sum_{m>i} sum_{n>j} |a_ij a_mn - a_in a_mj|^2,
/// which agree identically; the caller asserts the gap.
std::pair<double, double> linear_entropy_identity_check(const Matrix& coeffs);

/// Haar-uniform random pure state (normalized complex Gaussian vector).
PureState random_pure(int d, std::uint64_t seed);

/// rho = G G† / Tr with G a 2d x rank complex Gaussian matrix.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

/// Convex mixture of `terms` random product states with uniform-Dirichlet
/// weights; separable by construction.
DensityMatrix random_separable(int d, int terms, std::uint64_t seed);

}  // namespace eofb
