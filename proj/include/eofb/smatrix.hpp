#pragma once

#include <vector>

#include "eofb/linalg.hpp"

namespace eofb {

/// Symmetric 2d x 2d indicator matrix for a qudit level pair (i, j), i < j,
/// with exactly four nonzero entries:
///   S(i, j+d) = S(j+d, i) = +1,   S(j, i+d) = S(i+d, j) = -1
/// (1-based indices). For any pure state written in the a_11..a_1d,a_21..a_2d
/// order, psi~ S psi = 2 (a_1i a_2j - a_1j a_2i).
struct SMatrix {
  int d = 0;
  int i = 0, j = 0;  // 1-based, i < j
  int sign = +1;     // -1 for the two-qubit spin-flip convention
  Matrix mat;        // dense 2d x 2d

  /// psi~ S psi evaluated through the sparse structure.
  Complex bilinear(const Vector& psi) const {
    return 2.0 * double(sign) *
           (psi(i - 1) * psi(d + j - 1) - psi(j - 1) * psi(d + i - 1));
  }
};

/// The dedicated two-qubit spin-flip matrix (antidiagonal -1, +1, +1, -1).
/// Differs from s_ij(2, 1, 2) by an overall sign, which the absolute values
/// in every concurrence formula make irrelevant.
SMatrix s_two_qubit();

/// Generalized indicator matrix for levels (i, j) of a qubit-qudit system.
SMatrix s_ij(int d, int i, int j);

/// All d(d-1)/2 indicator matrices in lexicographic (i, j) order. For d = 3
/// the sequence is the x, y, z channel triple.
std::vector<SMatrix> s_channels(int d);

}  // namespace eofb
