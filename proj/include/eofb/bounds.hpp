#pragma once

#include <vector>

#include "eofb/smatrix.hpp"
#include "eofb/states.hpp"

namespace eofb {

/// Square roots of the eigenvalues of rho^{1/2} S rho* S rho^{1/2} for one
/// channel, sorted descending. Only the four largest can be nonzero (the
/// indicator matrix has rank 4), so for d = 3 the tail is always zero.
struct ChannelSpectrum {
  int i = 0, j = 0;
  Eigen::VectorXd lambdas;  // length 2d, descending, >= 0
};

enum class BoundMode { ExactTwoQubit, LowerBound };

/// Per-channel spectra and bounds together with the aggregate c_db and the
/// entanglement-of-formation lower bound epsilon(c_db), in bits. For d = 2
/// the report also carries Wootters' exact values and mode ExactTwoQubit.
struct BoundReport {
  int d = 0;
  std::vector<ChannelSpectrum> spectra;  // lexicographic channel order
  std::vector<double> c_ij;              // max(0, l1 - l2 - l3 - l4) each
  double c_db = 0.0;
  double eof_lower = 0.0;
  BoundMode mode = BoundMode::LowerBound;
  double wootters_c = 0.0;    // valid when mode == ExactTwoQubit
  double wootters_eof = 0.0;  // valid when mode == ExactTwoQubit
};

ChannelSpectrum channel_lambdas(const DensityMatrix& rho, const SMatrix& s,
                                double tol = kDefaultTol);

/// Wootters' closed-form two-qubit concurrence max(0, l1 - l2 - l3 - l4),
/// computed with the dedicated spin-flip matrix. Throws WrongDimension
/// unless d = 2.
double wootters_concurrence(const DensityMatrix& rho);

/// Exact two-qubit entanglement of formation epsilon(C(rho)), in bits.
double wootters_eof(const DensityMatrix& rho);

/// Lower bound on the minimum average concurrence restricted to channel
/// (i, j).
double channel_bound(const DensityMatrix& rho, int i, int j,
                     double tol = kDefaultTol);

/// Full report: every channel bound, c_db = sqrt(sum c_ij^2), and
/// epsilon(c_db).
BoundReport cdb_bound(const DensityMatrix& rho, double tol = kDefaultTol);

/// Root-sum-square aggregation of nonnegative per-channel minima; the
/// Lagrange-multiplier minimum of sum_a sqrt(x_a^2 + y_a^2 + ...) under fixed
/// column sums. Throws NegativeInput.
double aggregate_lower(const std::vector<double>& channel_sums);

}  // namespace eofb
