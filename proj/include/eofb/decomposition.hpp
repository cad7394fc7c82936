#pragma once

#include <array>
#include <vector>

#include "eofb/bounds.hpp"

namespace eofb {

/// Weighted pure-state ensemble in matrix form: column alpha is
/// sqrt(p_alpha) * Psi_alpha, so phi * phi† reproduces the density matrix it
/// decomposes. Columns may be identically zero (rank-deficient states).
struct Decomposition {
  Matrix phi;  // 2d x N

  int n() const { return static_cast<int>(phi.cols()); }
  std::vector<double> weights() const;

  /// Normalized column, or a zero vector for a zero column.
  Vector state(int alpha) const;

  Matrix reconstruct() const { return phi * phi.adjoint(); }

  /// Max-norm residual of phi phi† against rho.
  double residual(const DensityMatrix& rho) const {
    return (reconstruct() - rho.rho).cwiseAbs().maxCoeff();
  }
};

/// Right factors are 2d x N matrices with orthonormal rows (RR† = I); when
/// the decomposed state is rank deficient only the rows touching nonzero
/// columns of W are constrained.
using RightMatrix = Matrix;

/// Per-channel sums X_D = sum_alpha |phi~_a S phi_a| of a decomposition and
/// the (unminimized) average concurrence sum_alpha p_a Con(Psi_a).
struct ChannelSums {
  std::vector<double> per_channel;
  double total = 0.0;
};

/// The eigendecomposition ensemble: column s is sqrt(mu_s) w_s; columns whose
/// eigenvalue falls below 1e-12 * mu_max are zeroed.
Decomposition eigen_decomposition(const DensityMatrix& rho);

/// phi = W R. Rows of r acting on nonzero columns of w must be orthonormal
/// within 1e-9 (BadRightMatrix otherwise).
Decomposition apply_right(const Decomposition& w, const RightMatrix& r);

ChannelSums average_concurrence(const Decomposition& dec,
                                const std::vector<SMatrix>& channels);

/// Average entanglement sum_alpha p_a epsilon(Con(Psi_a)) in bits, over the
/// given channel set.
double average_entanglement(const Decomposition& dec,
                            const std::vector<SMatrix>& channels);

/// The unitary whose column sums sum_a Q_{ma}^2 equal +1 for m = 1 and -1
/// for m = 2, 3, 4; rows beyond the fourth are identity. n even, >= 4.
Matrix q_greater(int n);

/// Angles (theta2, theta3, theta4) closing the phasor sum
/// |l1 + l2 e^{2i t2} + l3 e^{2i t3} + l4 e^{2i t4}| = 0. Requires the
/// l1 <= l2 + l3 + l4 regime (NotInRegime otherwise); input descending >= 0.
std::array<double, 3> solve_angles(const std::array<double, 4>& lambdas);

/// Phased-Hadamard unitary making every column sum sum_m l_m Q_{ma}^2 vanish
/// in the l1 <= l2 + l3 + l4 regime; rows beyond the fourth are identity.
Matrix q_less(const std::array<double, 4>& lambdas, int n = 4);

/// Builds a decomposition of rho with n_columns >= 2d terms whose channel sum
/// sum_a |phi~_a S phi_a| attains max(0, l1 - l2 - l3 - l4) for the given
/// channel. Pipeline: W from the eigendecomposition, Takagi of W~ S W, then
/// Q> or Q< (padded to 2d x n by positivity-preserving Givens rotations) and
/// R = U_W† Q.
Decomposition optimal_channel_decomposition(const DensityMatrix& rho,
                                            const SMatrix& s, int n_columns);

}  // namespace eofb
