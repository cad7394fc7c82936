#include "eofb/bounds.hpp"

#include <cmath>

namespace eofb {

namespace {

double spectrum_bound(const ChannelSpectrum& sp) {
  return std::max(0.0, sp.lambdas(0) - sp.lambdas(1) - sp.lambdas(2) -
                           sp.lambdas(3));
}

}  // namespace

ChannelSpectrum channel_lambdas(const DensityMatrix& rho, const SMatrix& s,
                                double tol) {
  if (s.d != rho.d) {
    throw Error(ErrorKind::DimensionMismatch,
                "channel_lambdas: S matrix is for d = " + std::to_string(s.d) +
                    ", state has d = " + std::to_string(rho.d));
  }
  // The lambdas are the square roots of the eigenvalues of
  // rho^{1/2} S rho* S rho^{1/2} = N N† with N = rho^{1/2} S (rho^{1/2})*,
  // so they come out of an SVD of N directly; this keeps the structural
  // zeros of the spectrum at machine precision instead of sqrt(eps).
  const Matrix root = psd_sqrt(rho.rho, tol);
  const Matrix n = root * s.mat * root.conjugate();
  Eigen::JacobiSVD<Matrix> svd(n);

  ChannelSpectrum sp;
  sp.i = s.i;
  sp.j = s.j;
  sp.lambdas = svd.singularValues();
  return sp;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.d != 2) {
    throw Error(ErrorKind::WrongDimension,
                "wootters_concurrence: defined for d = 2 only, got d = " +
                    std::to_string(rho.d));
  }
  return spectrum_bound(channel_lambdas(rho, s_two_qubit()));
}

double wootters_eof(const DensityMatrix& rho) {
  return epsilon(wootters_concurrence(rho));
}

double channel_bound(const DensityMatrix& rho, int i, int j, double tol) {
  return spectrum_bound(channel_lambdas(rho, s_ij(rho.d, i, j), tol));
}

BoundReport cdb_bound(const DensityMatrix& rho, double tol) {
  BoundReport rep;
  rep.d = rho.d;
  for (const SMatrix& s : s_channels(rho.d)) {
    rep.spectra.push_back(channel_lambdas(rho, s, tol));
    rep.c_ij.push_back(spectrum_bound(rep.spectra.back()));
  }
  rep.c_db = aggregate_lower(rep.c_ij);
  rep.eof_lower = epsilon(rep.c_db);
  if (rho.d == 2) {
    rep.mode = BoundMode::ExactTwoQubit;
    rep.wootters_c = wootters_concurrence(rho);
    rep.wootters_eof = epsilon(rep.wootters_c);
  } else {
    rep.mode = BoundMode::LowerBound;
  }
  return rep;
}

double aggregate_lower(const std::vector<double>& channel_sums) {
  for (double v : channel_sums) {
    if (v < 0.0) {
      throw Error(ErrorKind::NegativeInput,
                  "aggregate_lower: negative input " + std::to_string(v), v);
    }
  }
  if (channel_sums.size() == 1) return channel_sums[0];
  double sq = 0.0;
  for (double v : channel_sums) sq += v * v;
  return std::sqrt(sq);
}

}  // namespace eofb
