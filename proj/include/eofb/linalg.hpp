#pragma once

#include <complex>

#include <Eigen/Dense>

#include "eofb/errors.hpp"
#include "eofb/rng.hpp"

namespace eofb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

struct HermitianEig {
  Eigen::VectorXd eigenvalues;  // sorted descending
  Matrix eigenvectors;          // unitary, columns matching eigenvalues
};

/// Factorization of a complex symmetric matrix m as  m = U~ * diag * U
/// with U unitary and diag nonnegative, sorted descending (the diag entries
/// are the singular values of m).
struct TakagiFactorization {
  Eigen::VectorXd diagonal;
  Matrix unitary;

  Matrix reconstruct() const {
    return unitary.transpose() * diagonal.asDiagonal() * unitary;
  }
};

struct UnitaryCheck {
  bool unitary = false;
  double max_deviation = 0.0;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Ties keep the underlying solver's (deterministic) order. Throws
/// NotSquare / NotHermitian (detail = max deviation from m†).
HermitianEig hermitian_eig(const Matrix& m, double tol = kDefaultTol);

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything below -tol throws NotPsd (detail = most negative eigenvalue).
Matrix psd_sqrt(const Matrix& m, double tol = kDefaultTol);

/// Takagi (Autonne) factorization of a complex symmetric matrix, built on the
/// eigendecomposition of m * conj(m) with per-column phase correction;
/// clusters of near-degenerate singular values are resolved through the
/// symmetric bilinear form restricted to the cluster. Throws NotSymmetric.
TakagiFactorization takagi(const Matrix& m, double tol = kDefaultTol);

UnitaryCheck is_unitary(const Matrix& m, double tol = kDefaultTol);

/// Haar-distributed n x n unitary (Ginibre + QR with phase-fixed R diagonal).
Matrix haar_unitary(int n, Rng& rng);

}  // namespace eofb
