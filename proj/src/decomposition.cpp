#include "eofb/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace eofb {

namespace {

constexpr std::uint64_t kPaddingSeed = 0xD1B54A32D192ED03ull;

// Support = indices of nonzero columns of w.
std::vector<int> support_of(const Matrix& w) {
  std::vector<int> sup;
  for (int s = 0; s < w.cols(); ++s) {
    if (w.col(s).norm() > 0.0) sup.push_back(s);
  }
  return sup;
}

// arccos with clamping against roundoff just outside [-1, 1].
double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// Extends a square q (m x m) to m x n, n >= m, by chaining Givens rotations
// that pair each fresh zero column with one of the original columns. Such a
// rotation scales the two per-column sums sum_m l_m Q_{ma}^2 by cos^2 and
// sin^2, so their signs (and the total) are untouched.
Matrix extend_columns(const Matrix& q, int n) {
  const int m = static_cast<int>(q.rows());
  Matrix ext = Matrix::Zero(m, n);
  ext.leftCols(q.cols()) = q;
  std::uint64_t state = kPaddingSeed ^ (0x9E3779B97F4A7C15ull * n);
  for (int beta = static_cast<int>(q.cols()); beta < n; ++beta) {
    const int a = (beta - static_cast<int>(q.cols())) % static_cast<int>(q.cols());
    const double u =
        static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    const double theta = 0.2 + u * (M_PI / 2 - 0.4);  // strictly inside (0, pi/2)
    const double c = std::cos(theta), s = std::sin(theta);
    const Vector col_a = ext.col(a);
    ext.col(a) = c * col_a;
    ext.col(beta) = s * col_a;
  }
  return ext;
}

}  // namespace

std::vector<double> Decomposition::weights() const {
  std::vector<double> p(n());
  for (int a = 0; a < n(); ++a) p[a] = phi.col(a).squaredNorm();
  return p;
}

Vector Decomposition::state(int alpha) const {
  Vector c = phi.col(alpha);
  const double nc = c.norm();
  if (nc > 0.0) c /= nc;
  return c;
}

Decomposition eigen_decomposition(const DensityMatrix& rho) {
  HermitianEig eg = hermitian_eig(rho.rho);
  const int dim = rho.dim();
  const double mu_max = std::max(eg.eigenvalues(0), 0.0);
  const double zero_cut = 1e-12 * mu_max;

  Decomposition dec;
  dec.phi = Matrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const double mu = eg.eigenvalues(s);
    if (mu > zero_cut) {
      dec.phi.col(s) = std::sqrt(mu) * eg.eigenvectors.col(s);
    }
  }
  return dec;
}

Decomposition apply_right(const Decomposition& w, const RightMatrix& r) {
  if (r.rows() != w.phi.cols()) {
    throw Error(ErrorKind::BadRightMatrix,
                "apply_right: R has " + std::to_string(r.rows()) +
                    " rows, expected " + std::to_string(w.phi.cols()));
  }
  if (r.cols() < r.rows()) {
    throw Error(ErrorKind::BadRightMatrix,
                "apply_right: R must have at least as many columns as rows");
  }
  const Matrix gram = r * r.adjoint();
  const std::vector<int> sup = support_of(w.phi);
  double dev = 0.0;
  for (int s : sup) {
    for (int t : sup) {
      const Complex expect = (s == t) ? Complex(1, 0) : Complex(0, 0);
      dev = std::max(dev, std::abs(gram(s, t) - expect));
    }
  }
  if (dev > 1e-9) {
    throw Error(ErrorKind::BadRightMatrix,
                "apply_right: rows not orthonormal on support, deviation " +
                    std::to_string(dev),
                dev);
  }
  return Decomposition{w.phi * r};
}

ChannelSums average_concurrence(const Decomposition& dec,
                                const std::vector<SMatrix>& channels) {
  ChannelSums out;
  out.per_channel.assign(channels.size(), 0.0);
  for (int a = 0; a < dec.n(); ++a) {
    const Vector col = dec.phi.col(a);
    double sq = 0.0;
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const double v = std::abs(channels[c].bilinear(col));
      out.per_channel[c] += v;
      sq += v * v;
    }
    out.total += std::sqrt(sq);
  }
  return out;
}

double average_entanglement(const Decomposition& dec,
                            const std::vector<SMatrix>& channels) {
  double e = 0.0;
  for (int a = 0; a < dec.n(); ++a) {
    const Vector col = dec.phi.col(a);
    const double p = col.squaredNorm();
    if (p <= 0.0) continue;
    double sq = 0.0;
    for (const SMatrix& s : channels) sq += std::norm(s.bilinear(col));
    const double con = std::sqrt(sq) / p;
    e += p * epsilon(std::min(con, 1.0));
  }
  return e;
}

Matrix q_greater(int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::BadSize,
                "q_greater: size must be even and >= 4, got " +
                    std::to_string(n));
  }
  Matrix q = Matrix::Zero(n, n);
  const Complex im(0, 1);
  q.block<4, 4>(0, 0) << 1, 1, 1, 1,
                         im, im, -im, -im,
                         im, -im, im, -im,
                         im, -im, -im, im;
  for (int k = 4; k < n; ++k) q(k, k) = 2.0;
  return 0.5 * q;
}

std::array<double, 3> solve_angles(const std::array<double, 4>& lambdas) {
  const double l1 = lambdas[0], l2 = lambdas[1], l3 = lambdas[2],
               l4 = lambdas[3];
  if (l4 < 0.0 || l1 < l2 || l2 < l3 || l3 < l4) {
    throw Error(ErrorKind::OutOfRange,
                "solve_angles: input must be nonnegative and descending");
  }
  if (l1 - l2 - l3 - l4 > 0.0) {
    throw Error(ErrorKind::NotInRegime,
                "solve_angles: l1 - l2 - l3 - l4 = " +
                    std::to_string(l1 - l2 - l3 - l4) + " > 0",
                l1 - l2 - l3 - l4);
  }
  if (l1 <= 0.0) return {0.0, 0.0, 0.0};

  // Treat theta4 as the free parameter: w = l1 + l4 e^{2i t4} sweeps
  // |w| over [l1 - l4, l1 + l4], and the (l2, l3) pair closes w whenever
  // |l2 - l3| <= |w| <= l2 + l3. Both constraints leave a nonempty interval
  // in the regime; aim for its midpoint and solve each phase by the law of
  // cosines.
  const double lo = std::max(l2 - l3, l1 - l4);
  const double hi = std::min(l2 + l3, l1 + l4);
  const double t = 0.5 * (lo + hi);

  double phi4 = 0.0;
  if (l4 > 0.0) {
    phi4 = safe_acos((t * t - l1 * l1 - l4 * l4) / (2.0 * l1 * l4));
  }
  const Complex im(0, 1);
  const Complex w = l1 + l4 * std::exp(2.0 * im * (phi4 / 2.0));

  // l2 e^{i p2} + l3 e^{i p3} = -w, |w| = t (up to roundoff).
  const double tw = std::abs(w);
  double phi2 = 0.0, phi3 = 0.0;
  if (l2 > 0.0 && tw > 0.0) {
    const double gamma = std::arg(-w);
    phi2 = gamma + safe_acos((tw * tw + l2 * l2 - l3 * l3) / (2.0 * tw * l2));
    const Complex rest = -w - l2 * std::exp(im * phi2);
    phi3 = (std::abs(rest) > 0.0) ? std::arg(rest) : 0.0;
  }
  return {phi2 / 2.0, phi3 / 2.0, phi4 / 2.0};
}

Matrix q_less(const std::array<double, 4>& lambdas, int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::BadSize,
                "q_less: size must be even and >= 4, got " + std::to_string(n));
  }
  const std::array<double, 3> th = solve_angles(lambdas);
  const Complex im(0, 1);
  const Complex p2 = std::exp(im * th[0]);
  const Complex p3 = std::exp(im * th[1]);
  const Complex p4 = std::exp(im * th[2]);
  Matrix q = Matrix::Zero(n, n);
  q.block<4, 4>(0, 0) << 1, 1, 1, 1,
                         p2, p2, -p2, -p2,
                         p3, -p3, p3, -p3,
                         p4, -p4, -p4, p4;
  for (int k = 4; k < n; ++k) q(k, k) = 2.0;
  return 0.5 * q;
}

Decomposition optimal_channel_decomposition(const DensityMatrix& rho,
                                            const SMatrix& s, int n_columns) {
  const int dim = rho.dim();
  if (s.d != rho.d) {
    throw Error(ErrorKind::DimensionMismatch,
                "optimal_channel_decomposition: channel dimension mismatch");
  }
  if (n_columns < dim) {
    throw Error(ErrorKind::BadSize,
                "optimal_channel_decomposition: need n >= " +
                    std::to_string(dim) + " columns, got " +
                    std::to_string(n_columns));
  }
  const Decomposition w = eigen_decomposition(rho);
  const Matrix tau = w.phi.transpose() * s.mat * w.phi;
  TakagiFactorization tf = takagi(tau, 1e-8 * std::max(1.0, tau.cwiseAbs().maxCoeff()));

  const double delta =
      tf.diagonal(0) - tf.diagonal(1) - tf.diagonal(2) - tf.diagonal(3);
  Matrix q;
  if (delta >= 0.0) {
    q = q_greater(dim);
  } else {
    q = q_less({tf.diagonal(0), tf.diagonal(1), tf.diagonal(2),
                tf.diagonal(3)},
               dim);
  }
  if (n_columns > dim) q = extend_columns(q, n_columns);

  const Matrix r = tf.unitary.adjoint() * q;
  return Decomposition{w.phi * r};
}

}  // namespace eofb
