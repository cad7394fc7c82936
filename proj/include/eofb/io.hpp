#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "eofb/bounds.hpp"

namespace eofb {

inline constexpr const char* kToolVersion = "0.1.0";

/// On-disk density matrix: 2d x 2d nested arrays of [re, im] pairs, row-major
/// in the a_11..a_1d,a_21..a_2d product basis.
struct MatrixFile {
  int d = 0;
  Matrix matrix;
  std::string label;
};

/// Parsed report file (the serialized BoundReport plus provenance).
struct ReportFile {
  std::string version;
  std::string input_hash;
  double tol = 0.0;
  std::string label;
  BoundReport report;
};

/// FNV-1a 64-bit hash of raw bytes; reports embed it as provenance.
std::uint64_t fnv1a64(std::string_view bytes);

/// Shortest fixed-form rendering of a double at 17 significant digits
/// (round-trips exactly).
std::string format_double(double v);

MatrixFile parse_matrix_json(const std::string& text);            // ParseError
std::string write_matrix_json(const MatrixFile& f);               // deterministic
DensityMatrix to_density(const MatrixFile& f, double tol);        // validation errors

std::string write_report_json(const BoundReport& rep, std::uint64_t input_hash,
                              double tol, const std::string& label);
ReportFile parse_report_json(const std::string& text);            // ParseError

/// Single-report CSV: header plus one row (d, mode, per-channel bounds,
/// aggregate, EOF lower bound).
std::string write_report_csv(const BoundReport& rep);

/// Ensemble CSV schema v1. For d = 2 a wootters_c column sits between the
/// channel bounds and c_db; empirical_c and gap appear only with verify.
std::string ensemble_csv_header(int d, bool with_verify);
std::string ensemble_csv_row(int index, int rank, const BoundReport& rep,
                             bool with_verify, double empirical_c, double gap);

std::string read_file(const std::string& path);                   // IoError
void write_file(const std::string& path, const std::string& text);

}  // namespace eofb
