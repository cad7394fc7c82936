#include "eofb/linalg.hpp"

#include <algorithm>
#include <vector>

namespace eofb {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::NotSquare,
                std::string(op) + ": matrix must be square, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Takagi factorization of a small complex symmetric block c = w * diag(s) * w~,
// solved through the real symmetric embedding [[X, Y], [Y, -X]] of c = X + iY.
// Its spectrum is +/- the singular values of c, and every eigenvector (x; y)
// of a positive eigenvalue sigma gives a column w = x + iy with
// c * conj(w) = sigma * w. The near-null columns carry no usable phase and are
// re-orthonormalized in the complex sense instead.
void takagi_block(const Matrix& c, Eigen::VectorXd& s, Matrix& w) {
  const int k = static_cast<int>(c.rows());
  Eigen::MatrixXd t(2 * k, 2 * k);
  t.topLeftCorner(k, k) = c.real();
  t.topRightCorner(k, k) = c.imag();
  t.bottomLeftCorner(k, k) = c.imag();
  t.bottomRightCorner(k, k) = -c.real();
  t = 0.5 * (t + t.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::TakagiFailure, "takagi: block eigensolver failed");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const Eigen::MatrixXd& evec = es.eigenvectors();

  s.resize(k);
  w.resize(k, k);
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(2 * k - 1)));
  const double zero_floor = 1e-12 * std::max(scale, 1e-300);

  std::vector<int> null_slots;
  for (int j = 0; j < k; ++j) {
    const int idx = 2 * k - 1 - j;  // descending
    s(j) = std::max(ev(idx), 0.0);
    w.col(j) = evec.col(idx).head(k) + Complex(0, 1) * evec.col(idx).tail(k);
    if (ev(idx) <= zero_floor) null_slots.push_back(j);
  }
  if (null_slots.empty()) return;

  // The real eigenvectors near zero over-span the complex null space (both
  // signs map to it); pick a complex-orthonormal subset by pivoted
  // Gram-Schmidt against the already-fixed columns.
  std::vector<Vector> candidates;
  for (int idx = 0; idx < 2 * k; ++idx) {
    if (std::abs(ev(idx)) <= zero_floor) {
      candidates.push_back(evec.col(idx).head(k) +
                           Complex(0, 1) * evec.col(idx).tail(k));
    }
  }
  std::vector<bool> filled(k, true);
  for (int j : null_slots) filled[j] = false;
  for (int slot : null_slots) {
    int best = -1;
    double best_norm = -1.0;
    Vector best_v;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      Vector v = candidates[ci];
      for (int j = 0; j < k; ++j) {
        if (filled[j]) v -= w.col(j).dot(v) * w.col(j);
      }
      const double nv = v.norm();
      if (nv > best_norm) {
        best_norm = nv;
        best = static_cast<int>(ci);
        best_v = std::move(v);
      }
    }
    if (best < 0 || best_norm <= 0.0) {
      throw Error(ErrorKind::TakagiFailure,
                  "takagi: could not complete null-space basis");
    }
    w.col(slot) = best_v / best_norm;
    filled[slot] = true;
  }
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& m, double tol) {
  require_square(m, "hermitian_eig");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: matrix deviates from Hermitian by " +
                    std::to_string(dev),
                dev);
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::Internal, "hermitian_eig: eigensolver failed");
  }
  const int n = static_cast<int>(m.rows());
  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues(j) = es.eigenvalues()(n - 1 - j);
    out.eigenvectors.col(j) = es.eigenvectors().col(n - 1 - j);
  }
  return out;
}

Matrix psd_sqrt(const Matrix& m, double tol) {
  HermitianEig eg = hermitian_eig(m, tol);
  const int n = static_cast<int>(eg.eigenvalues.size());
  const double min_ev = eg.eigenvalues(n - 1);
  if (min_ev < -tol) {
    throw Error(ErrorKind::NotPsd,
                "psd_sqrt: most negative eigenvalue " + std::to_string(min_ev),
                min_ev);
  }
  Eigen::VectorXd roots(n);
  for (int j = 0; j < n; ++j) {
    roots(j) = std::sqrt(std::max(eg.eigenvalues(j), 0.0));
  }
  Matrix r = eg.eigenvectors * roots.asDiagonal() * eg.eigenvectors.adjoint();
  return 0.5 * (r + r.adjoint()).eval();
}

TakagiFactorization takagi(const Matrix& m, double tol) {
  require_square(m, "takagi");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    throw Error(ErrorKind::NotSymmetric,
                "takagi: matrix deviates from symmetric by " +
                    std::to_string(asym),
                asym);
  }
  const Matrix a = 0.5 * (m + m.transpose());
  const int n = static_cast<int>(a.rows());

  // Eigenvalues of a * conj(a) are the squared singular values of a.
  const Matrix h = a * a.conjugate();
  HermitianEig eg = hermitian_eig(h, 1e-8 * std::max(1.0, h.cwiseAbs().maxCoeff()));

  const double s2max = std::max(eg.eigenvalues(0), 0.0);
  const double cluster_gap = 1e-6 * std::max(s2max, 1e-300);

  Eigen::VectorXd sigma(n);
  Matrix u_std(n, n);  // a = u_std * diag(sigma) * u_std~
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n &&
           eg.eigenvalues(end - 1) - eg.eigenvalues(end) <= cluster_gap) {
      ++end;
    }
    const int k = end - start;
    const Matrix vg = eg.eigenvectors.middleCols(start, k);
    const Matrix c = vg.adjoint() * a * vg.conjugate();  // symmetric bilinear form
    Eigen::VectorXd s_blk;
    Matrix w_blk;
    takagi_block(0.5 * (c + c.transpose()), s_blk, w_blk);
    sigma.segment(start, k) = s_blk;
    u_std.middleCols(start, k) = vg * w_blk;
    start = end;
  }

  // Cluster means descend already; a final stable sort guards against
  // eps-level inversions at cluster boundaries.
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](int p, int q) { return sigma(p) > sigma(q); });
  TakagiFactorization out;
  out.diagonal.resize(n);
  out.unitary.resize(n, n);
  Matrix u_sorted(n, n);
  for (int j = 0; j < n; ++j) {
    out.diagonal(j) = sigma(order[j]);
    u_sorted.col(j) = u_std.col(order[j]);
  }
  out.unitary = u_sorted.transpose();
  return out;
}

UnitaryCheck is_unitary(const Matrix& m, double tol) {
  require_square(m, "is_unitary");
  const int n = static_cast<int>(m.rows());
  const Matrix g = m * m.adjoint() - Matrix::Identity(n, n);
  UnitaryCheck out;
  out.max_deviation = g.cwiseAbs().maxCoeff();
  out.unitary = out.max_deviation <= tol;
  return out;
}

Matrix haar_unitary(int n, Rng& rng) {
  Matrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      g(r, c) = rng.normal_complex();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : Complex(1. , 0.);
  }
  return q;
}

}  // namespace eofb
