#pragma once

#include <doctest.h>

#include "eofb/bounds.hpp"

namespace eofb::test {

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline Matrix random_hermitian(int n, Rng& rng) {
  Matrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.normal_complex();
  }
  return g + g.adjoint();
}

inline Matrix random_complex_symmetric(int n, Rng& rng) {
  Matrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.normal_complex();
  }
  return 0.5 * (g + g.transpose());
}

// |Phi+> = (|00> + |11>)/sqrt(2) as a two-qubit density matrix.
inline DensityMatrix bell_state() {
  Vector psi(4);
  psi << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return DensityMatrix::validated(2, psi * psi.adjoint());
}

// Werner family p |Psi-><Psi-| + (1 - p) I / 4.
inline DensityMatrix werner(double p) {
  Vector psi(4);
  psi << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  Matrix rho = p * (psi * psi.adjoint()) + (1.0 - p) / 4.0 * Matrix::Identity(4, 4);
  return DensityMatrix::validated(2, rho);
}

// Embeds a two-qubit state into the first two qudit levels of a qubit-qudit
// system: index (i, j)_2 -> (i, j)_d.
inline DensityMatrix embed_two_qubit(const DensityMatrix& rho2, int d) {
  REQUIRE(rho2.d == 2);
  Matrix big = Matrix::Zero(2 * d, 2 * d);
  auto map = [d](int m) { return (m / 2) * d + (m % 2); };
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) big(map(r), map(c)) = rho2.rho(r, c);
  }
  return DensityMatrix::validated(d, std::move(big));
}

}  // namespace eofb::test
