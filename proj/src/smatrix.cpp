#include "eofb/smatrix.hpp"

namespace eofb {

SMatrix s_two_qubit() {
  SMatrix s;
  s.d = 2;
  s.i = 1;
  s.j = 2;
  s.sign = -1;
  s.mat = Matrix::Zero(4, 4);
  s.mat(0, 3) = -1.0;
  s.mat(3, 0) = -1.0;
  s.mat(1, 2) = 1.0;
  s.mat(2, 1) = 1.0;
  return s;
}

SMatrix s_ij(int d, int i, int j) {
  if (d < 2) {
    throw Error(ErrorKind::BadIndices,
                "s_ij: d must be >= 2, got " + std::to_string(d));
  }
  if (i < 1 || j <= i || j > d) {
    throw Error(ErrorKind::BadIndices,
                "s_ij: need 1 <= i < j <= d, got (" + std::to_string(i) +
                    ", " + std::to_string(j) + ") with d = " +
                    std::to_string(d));
  }
  SMatrix s;
  s.d = d;
  s.i = i;
  s.j = j;
  s.mat = Matrix::Zero(2 * d, 2 * d);
  s.mat(i - 1, j + d - 1) = 1.0;
  s.mat(j + d - 1, i - 1) = 1.0;
  s.mat(j - 1, i + d - 1) = -1.0;
  s.mat(i + d - 1, j - 1) = -1.0;
  return s;
}

std::vector<SMatrix> s_channels(int d) {
  if (d < 2) {
    throw Error(ErrorKind::BadIndices,
                "s_channels: d must be >= 2, got " + std::to_string(d));
  }
  std::vector<SMatrix> out;
  out.reserve(d * (d - 1) / 2);
  for (int i = 1; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      out.push_back(s_ij(d, i, j));
    }
  }
  return out;
}

}  // namespace eofb
