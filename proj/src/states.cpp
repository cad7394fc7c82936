#include "eofb/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eofb {

namespace {

double clamp0(double x) { return x > 0.0 ? x : 0.0; }

// -x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x) {
  return (x > 0.0) ? -x * std::log2(x) : 0.0;
}

// Multiplies v by the phase making its largest-magnitude entry real positive.
void fix_phase(Eigen::Ref<Vector> v) {
  int imax = 0;
  double amax = -1.0;
  for (int k = 0; k < v.size(); ++k) {
    const double a = std::abs(v(k));
    if (a > amax) {
      amax = a;
      imax = k;
    }
  }
  if (amax > 0.0) {
    v *= std::conj(v(imax)) / amax;
    v(imax) = Complex(std::abs(v(imax)), 0.0);
  }
}

}  // namespace

PureState PureState::validated(int d, Vector coeffs, double tol) {
  if (d < 2) {
    throw Error(ErrorKind::WrongDimension,
                "PureState: qudit dimension must be >= 2, got " +
                    std::to_string(d));
  }
  if (coeffs.size() != 2 * d) {
    throw Error(ErrorKind::DimensionMismatch,
                "PureState: expected " + std::to_string(2 * d) +
                    " coefficients, got " + std::to_string(coeffs.size()));
  }
  if (!coeffs.allFinite()) {
    throw Error(ErrorKind::OutOfRange, "PureState: non-finite coefficient");
  }
  const double dev = std::abs(coeffs.squaredNorm() - 1.0);
  if (dev > tol) {
    throw Error(ErrorKind::NotNormalized,
                "PureState: |norm^2 - 1| = " + std::to_string(dev), dev);
  }
  return PureState{d, std::move(coeffs)};
}

Matrix PureState::grid() const {
  Matrix a(2, d);
  for (int j = 0; j < d; ++j) {
    a(0, j) = coeffs(j);
    a(1, j) = coeffs(d + j);
  }
  return a;
}

DensityMatrix DensityMatrix::validated(int d, Matrix rho, double tol) {
  if (d < 2) {
    throw Error(ErrorKind::WrongDimension,
                "DensityMatrix: qudit dimension must be >= 2, got " +
                    std::to_string(d));
  }
  if (rho.rows() != 2 * d || rho.cols() != 2 * d) {
    throw Error(ErrorKind::DimensionMismatch,
                "DensityMatrix: expected " + std::to_string(2 * d) + "x" +
                    std::to_string(2 * d) + " matrix");
  }
  if (!rho.allFinite()) {
    throw Error(ErrorKind::OutOfRange, "DensityMatrix: non-finite entry");
  }
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) {
    throw Error(ErrorKind::NotHermitian,
                "DensityMatrix: Hermiticity violated by " +
                    std::to_string(herm_dev),
                herm_dev);
  }
  const double tr_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr_dev > 1e-10) {
    throw Error(ErrorKind::OutOfRange,
                "DensityMatrix: |trace - 1| = " + std::to_string(tr_dev),
                tr_dev);
  }
  HermitianEig eg = hermitian_eig(rho, tol);
  const double min_ev = eg.eigenvalues(eg.eigenvalues.size() - 1);
  if (min_ev < -tol) {
    throw Error(ErrorKind::NotPsd,
                "DensityMatrix: most negative eigenvalue " +
                    std::to_string(min_ev),
                min_ev);
  }
  return DensityMatrix{d, std::move(rho)};
}

Matrix SchmidtData::reconstruct_grid() const {
  return c1 * left.col(0) * right.col(0).transpose() +
         c2 * left.col(1) * right.col(1).transpose();
}

Weights Weights::validated(std::vector<double> p, double tol) {
  double sum = 0.0;
  for (double w : p) {
    if (!(w > 0.0)) {
      throw Error(ErrorKind::OutOfRange,
                  "Weights: entries must be positive, got " +
                      std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized,
                "Weights: sum to " + std::to_string(sum));
  }
  return Weights{std::move(p)};
}

SchmidtData schmidt(const PureState& psi) {
  const double dev = std::abs(psi.coeffs.squaredNorm() - 1.0);
  if (dev > 1e-10) {
    throw Error(ErrorKind::NotNormalized,
                "schmidt: state not normalized, |norm^2 - 1| = " +
                    std::to_string(dev),
                dev);
  }
  const Matrix a = psi.grid();
  const Matrix b = a * a.adjoint();  // 2x2 Gram matrix
  HermitianEig eg = hermitian_eig(b, 1e-8);

  SchmidtData out;
  out.c1 = std::sqrt(clamp0(eg.eigenvalues(0)));
  out.c2 = std::sqrt(clamp0(eg.eigenvalues(1)));
  out.left = eg.eigenvectors;
  fix_phase(out.left.col(0));
  fix_phase(out.left.col(1));

  out.right.resize(psi.d, 2);
  for (int k = 0; k < 2; ++k) {
    Vector v = a.transpose() * out.left.col(k).conjugate();
    const double nv = v.norm();
    if (nv > std::max(1e-13, 1e-10 * out.c1)) {
      out.right.col(k) = v / nv;
    } else {
      // Zero Schmidt coefficient: complete deterministically with the basis
      // vector least aligned with the other right vector.
      const Vector other = out.right.col(1 - k);
      int best = 0;
      double best_res = -1.0;
      for (int j = 0; j < psi.d; ++j) {
        Vector e = Vector::Zero(psi.d);
        e(j) = 1.0;
        e -= other.dot(e) * other;
        const double res = e.norm();
        if (res > best_res) {
          best_res = res;
          best = j;
        }
      }
      Vector e = Vector::Zero(psi.d);
      e(best) = 1.0;
      e -= other.dot(e) * other;
      out.right.col(k) = e / e.norm();
      fix_phase(out.right.col(k));
    }
  }
  return out;
}

double entropy_pure(const PureState& psi) {
  SchmidtData sd = schmidt(psi);
  return xlog2x(sd.c1 * sd.c1) + xlog2x(sd.c2 * sd.c2);
}

double concurrence_pure(const PureState& psi) {
  SchmidtData sd = schmidt(psi);
  const double c_schmidt = 2.0 * sd.c1 * sd.c2;

  const Matrix a = psi.grid();
  double sum = 0.0;
  for (int i = 0; i < psi.d; ++i) {
    for (int j = i + 1; j < psi.d; ++j) {
      sum += std::norm(a(0, i) * a(1, j) - a(0, j) * a(1, i));
    }
  }
  const double c_det = 2.0 * std::sqrt(sum);
  if (std::abs(c_schmidt - c_det) > 1e-10) {
    throw Error(ErrorKind::Internal,
                "concurrence_pure: Schmidt and determinant-sum routes "
                "disagree: " +
                    std::to_string(c_schmidt) + " vs " + std::to_string(c_det),
                std::abs(c_schmidt - c_det));
  }
  return std::clamp(c_schmidt, 0.0, 1.0);
}

double epsilon(double c) {
  if (c < -1e-12 || c > 1.0 + 1e-12) {
    throw Error(ErrorKind::OutOfRange,
                "epsilon: concurrence " + std::to_string(c) +
                    " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return xlog2x(x) + xlog2x(1.0 - x);
}

Matrix reduced_density(const PureState& psi, Subsystem subsystem) {
  const Matrix a = psi.grid();
  if (subsystem == Subsystem::A) {
    return a * a.adjoint();
  }
  return a.transpose() * a.conjugate();
}

std::pair<double, double> linear_entropy_identity_check(const Matrix& coeffs) {
  const double dev = std::abs(coeffs.squaredNorm() - 1.0);
  if (dev > 1e-10) {
    throw Error(ErrorKind::NotNormalized,
                "linear_entropy_identity_check: |norm^2 - 1| = " +
                    std::to_string(dev),
                dev);
  }
  const int da = static_cast<int>(coeffs.rows());
  const int db = static_cast<int>(coeffs.cols());

  const Matrix rho_a = coeffs * coeffs.adjoint();
  const double lhs = 1.0 - (rho_a * rho_a).trace().real();

  double rhs = 0.0;
  for (int i = 0; i < da; ++i) {
    for (int m = i + 1; m < da; ++m) {
      for (int j = 0; j < db; ++j) {
        for (int n = j + 1; n < db; ++n) {
          rhs += std::norm(coeffs(i, j) * coeffs(m, n) -
                           coeffs(i, n) * coeffs(m, j));
        }
      }
    }
  }
  return {lhs, 2.0 * rhs};
}

PureState random_pure(int d, std::uint64_t seed) {
  if (d < 2) {
    throw Error(ErrorKind::WrongDimension,
                "random_pure: d must be >= 2, got " + std::to_string(d));
  }
  Rng rng(seed);
  Vector v(2 * d);
  for (int k = 0; k < 2 * d; ++k) v(k) = rng.normal_complex();
  v /= v.norm();
  return PureState{d, std::move(v)};
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (d < 2) {
    throw Error(ErrorKind::WrongDimension,
                "random_density: d must be >= 2, got " + std::to_string(d));
  }
  if (rank < 1 || rank > 2 * d) {
    throw Error(ErrorKind::BadRank,
                "random_density: rank " + std::to_string(rank) +
                    " outside [1, " + std::to_string(2 * d) + "]");
  }
  Rng rng(seed);
  Matrix g(2 * d, rank);
  for (int r = 0; r < 2 * d; ++r) {
    for (int c = 0; c < rank; ++c) g(r, c) = rng.normal_complex();
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{d, std::move(rho)};
}

DensityMatrix random_separable(int d, int terms, std::uint64_t seed) {
  if (d < 2) {
    throw Error(ErrorKind::WrongDimension,
                "random_separable: d must be >= 2, got " + std::to_string(d));
  }
  if (terms < 1) {
    throw Error(ErrorKind::BadRank,
                "random_separable: terms must be >= 1, got " +
                    std::to_string(terms));
  }
  Rng rng(seed);
  // Uniform Dirichlet weights from normalized exponentials.
  std::vector<double> w(terms);
  double wsum = 0.0;
  for (int t = 0; t < terms; ++t) {
    w[t] = -std::log(rng.uniform());
    wsum += w[t];
  }
  Matrix rho = Matrix::Zero(2 * d, 2 * d);
  for (int t = 0; t < terms; ++t) {
    Eigen::Vector2cd q;
    q << rng.normal_complex(), rng.normal_complex();
    q /= q.norm();
    Vector b(d);
    for (int j = 0; j < d; ++j) b(j) = rng.normal_complex();
    b /= b.norm();
    Vector psi(2 * d);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < d; ++j) psi(i * d + j) = q(i) * b(j);
    }
    rho += (w[t] / wsum) * (psi * psi.adjoint());
  }
  rho /= rho.trace().real();
  return DensityMatrix{d, std::move(rho)};
}

}  // namespace eofb
