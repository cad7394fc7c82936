#pragma once

#include <stdexcept>
#include <string>

namespace eofb {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  NotPsd,
  NotSymmetric,
  NotNormalized,
  OutOfRange,
  BadRank,
  BadIndices,
  DimensionMismatch,
  WrongDimension,
  BadRightMatrix,
  BadSize,
  BadShape,
  NotInRegime,
  NegativeInput,
  TakagiFailure,
  ParseError,
  IoError,
  Internal,
};

/// Single exception type for the whole library; `kind()` identifies the
/// violated contract and `detail()` carries a diagnostic magnitude where one
/// exists (max Hermiticity deviation, most negative eigenvalue, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double detail = 0.0)
      : std::runtime_error(what), kind_(kind), detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  double detail() const { return detail_; }

 private:
  ErrorKind kind_;
  double detail_;
};

}  // namespace eofb
