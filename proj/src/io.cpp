#include "eofb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eofb {

namespace {

using nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void append_complex(std::string& out, const Complex& z) {
  out += '[';
  out += format_double(z.real());
  out += ',';
  out += format_double(z.imag());
  out += ']';
}

const char* mode_name(BoundMode m) {
  return m == BoundMode::ExactTwoQubit ? "exact-two-qubit" : "lower-bound";
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

MatrixFile parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError,
                std::string("matrix file: invalid JSON: ") + e.what());
  }
  MatrixFile f;
  try {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("matrix")) {
      throw Error(ErrorKind::ParseError,
                  "matrix file: expected an object with 'd' and 'matrix'");
    }
    f.d = doc.at("d").get<int>();
    if (f.d < 2) {
      throw Error(ErrorKind::ParseError,
                  "matrix file: d must be >= 2, got " + std::to_string(f.d));
    }
    if (doc.contains("label")) f.label = doc.at("label").get<std::string>();
    const auto& rows = doc.at("matrix");
    const int dim = 2 * f.d;
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
      throw Error(ErrorKind::ParseError,
                  "matrix file: 'matrix' must have " + std::to_string(dim) +
                      " rows");
    }
    f.matrix.resize(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw Error(ErrorKind::ParseError,
                    "matrix file: row " + std::to_string(r) + " must have " +
                        std::to_string(dim) + " entries");
      }
      for (int c = 0; c < dim; ++c) {
        const auto& e = row.at(c);
        if (!e.is_array() || e.size() != 2) {
          throw Error(ErrorKind::ParseError,
                      "matrix file: entry (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") must be [re, im]");
        }
        f.matrix(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError,
                std::string("matrix file: malformed field: ") + e.what());
  }
  return f;
}

std::string write_matrix_json(const MatrixFile& f) {
  std::string out;
  out += "{\n  \"d\": " + std::to_string(f.d) + ",\n";
  if (!f.label.empty()) {
    out += "  \"label\": \"" + json_escape(f.label) + "\",\n";
  }
  out += "  \"matrix\": [\n";
  const int dim = 2 * f.d;
  for (int r = 0; r < dim; ++r) {
    out += "    [";
    for (int c = 0; c < dim; ++c) {
      append_complex(out, f.matrix(r, c));
      if (c + 1 < dim) out += ',';
    }
    out += (r + 1 < dim) ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

DensityMatrix to_density(const MatrixFile& f, double tol) {
  return DensityMatrix::validated(f.d, f.matrix, tol);
}

std::string write_report_json(const BoundReport& rep, std::uint64_t input_hash,
                              double tol, const std::string& label) {
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(input_hash));
  std::string out;
  out += "{\n";
  out += "  \"tool\": \"eofb\",\n";
  out += std::string("  \"version\": \"") + kToolVersion + "\",\n";
  out += std::string("  \"input_hash\": \"") + hash_buf + "\",\n";
  out += "  \"tol\": " + format_double(tol) + ",\n";
  out += "  \"label\": \"" + json_escape(label) + "\",\n";
  out += "  \"d\": " + std::to_string(rep.d) + ",\n";
  out += std::string("  \"mode\": \"") + mode_name(rep.mode) + "\",\n";
  out += "  \"channels\": [\n";
  for (std::size_t c = 0; c < rep.spectra.size(); ++c) {
    const ChannelSpectrum& sp = rep.spectra[c];
    out += "    {\"i\": " + std::to_string(sp.i) +
           ", \"j\": " + std::to_string(sp.j) + ", \"c\": " +
           format_double(rep.c_ij[c]) + ", \"lambdas\": [";
    for (int k = 0; k < sp.lambdas.size(); ++k) {
      out += format_double(sp.lambdas(k));
      if (k + 1 < sp.lambdas.size()) out += ',';
    }
    out += (c + 1 < rep.spectra.size()) ? "]},\n" : "]}\n";
  }
  out += "  ],\n";
  out += "  \"c_db\": " + format_double(rep.c_db) + ",\n";
  out += "  \"eof_lower\": " + format_double(rep.eof_lower);
  if (rep.mode == BoundMode::ExactTwoQubit) {
    out += ",\n  \"wootters\": {\"concurrence\": " +
           format_double(rep.wootters_c) +
           ", \"eof\": " + format_double(rep.wootters_eof) + "}\n";
  } else {
    out += "\n";
  }
  out += "}\n";
  return out;
}

ReportFile parse_report_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError,
                std::string("report file: invalid JSON: ") + e.what());
  }
  ReportFile rf;
  try {
    rf.version = doc.at("version").get<std::string>();
    rf.input_hash = doc.at("input_hash").get<std::string>();
    rf.tol = doc.at("tol").get<double>();
    rf.label = doc.value("label", std::string());
    rf.report.d = doc.at("d").get<int>();
    const std::string mode = doc.at("mode").get<std::string>();
    rf.report.mode = (mode == "exact-two-qubit") ? BoundMode::ExactTwoQubit
                                                 : BoundMode::LowerBound;
    for (const auto& ch : doc.at("channels")) {
      ChannelSpectrum sp;
      sp.i = ch.at("i").get<int>();
      sp.j = ch.at("j").get<int>();
      const auto& ls = ch.at("lambdas");
      sp.lambdas.resize(ls.size());
      for (std::size_t k = 0; k < ls.size(); ++k) {
        sp.lambdas(static_cast<int>(k)) = ls.at(k).get<double>();
      }
      rf.report.spectra.push_back(std::move(sp));
      rf.report.c_ij.push_back(ch.at("c").get<double>());
    }
    rf.report.c_db = doc.at("c_db").get<double>();
    rf.report.eof_lower = doc.at("eof_lower").get<double>();
    if (doc.contains("wootters")) {
      rf.report.wootters_c = doc.at("wootters").at("concurrence").get<double>();
      rf.report.wootters_eof = doc.at("wootters").at("eof").get<double>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError,
                std::string("report file: malformed field: ") + e.what());
  }
  return rf;
}

std::string write_report_csv(const BoundReport& rep) {
  std::string head = "d,mode";
  std::string row = std::to_string(rep.d) + "," + mode_name(rep.mode);
  for (std::size_t c = 0; c < rep.spectra.size(); ++c) {
    head += ",c_" + std::to_string(rep.spectra[c].i) +
            std::to_string(rep.spectra[c].j);
    row += "," + format_double(rep.c_ij[c]);
  }
  if (rep.mode == BoundMode::ExactTwoQubit) {
    head += ",wootters_c";
    row += "," + format_double(rep.wootters_c);
  }
  head += ",c_db,eof_lower";
  row += "," + format_double(rep.c_db) + "," + format_double(rep.eof_lower);
  return head + "\n" + row + "\n";
}

std::string ensemble_csv_header(int d, bool with_verify) {
  std::string head = "index,rank";
  for (const SMatrix& s : s_channels(d)) {
    head += ",c_" + std::to_string(s.i) + std::to_string(s.j);
  }
  if (d == 2) head += ",wootters_c";
  head += ",c_db,eof_lower";
  if (with_verify) head += ",empirical_c,gap";
  return head + "\n";
}

std::string ensemble_csv_row(int index, int rank, const BoundReport& rep,
                             bool with_verify, double empirical_c, double gap) {
  std::string row = std::to_string(index) + "," + std::to_string(rank);
  for (double c : rep.c_ij) row += "," + format_double(c);
  if (rep.d == 2) row += "," + format_double(rep.wootters_c);
  row += "," + format_double(rep.c_db) + "," + format_double(rep.eof_lower);
  if (with_verify) {
    row += "," + format_double(empirical_c) + "," + format_double(gap);
  }
  return row + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw Error(ErrorKind::IoError, "read failure on " + path);
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  }
  out << text;
  if (!out.good()) {
    throw Error(ErrorKind::IoError, "write failure on " + path);
  }
}

}  // namespace eofb
