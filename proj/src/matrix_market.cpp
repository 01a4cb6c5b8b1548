#include "rrge/matrix_market.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rrge/error.hpp"

namespace rrge {

namespace {

enum class Symmetry { kGeneral, kSymmetric, kSkew };

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid integer '" + std::string(tok) + "'", line);
  }
  return v;
}

double parse_value(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw ParseError("invalid value '" + std::string(tok) + "'", line);
  }
  return v;
}

/// Next non-comment, non-blank line; false at end of input.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

DenseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty input", 1);
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split(line);
  if (header.size() != 5 || lower(std::string(header[0])) != "%%matrixmarket") {
    throw ParseError("missing %%MatrixMarket header", lineno);
  }
  if (lower(std::string(header[1])) != "matrix") {
    throw UnsupportedFormat("Matrix Market object '" + std::string(header[1]) + "'");
  }
  const std::string format = lower(std::string(header[2]));
  const std::string field = lower(std::string(header[3]));
  const std::string symmetry_name = lower(std::string(header[4]));
  if (format != "array" && format != "coordinate") {
    throw ParseError("unknown format '" + format + "'", lineno);
  }
  if (field == "complex" || field == "pattern") {
    throw UnsupportedFormat("Matrix Market field '" + field + "' is not supported");
  }
  if (field != "real" && field != "integer" && field != "double") {
    throw ParseError("unknown field '" + field + "'", lineno);
  }
  Symmetry symmetry;
  if (symmetry_name == "general") {
    symmetry = Symmetry::kGeneral;
  } else if (symmetry_name == "symmetric") {
    symmetry = Symmetry::kSymmetric;
  } else if (symmetry_name == "skew-symmetric") {
    symmetry = Symmetry::kSkew;
  } else if (symmetry_name == "hermitian") {
    throw UnsupportedFormat("Matrix Market symmetry 'hermitian' is not supported");
  } else {
    throw ParseError("unknown symmetry '" + symmetry_name + "'", lineno);
  }

  if (!next_data_line(in, line, lineno)) throw ParseError("missing size line", lineno + 1);
  const auto size = split(line);
  const bool coordinate = format == "coordinate";
  if (size.size() != (coordinate ? 3u : 2u)) throw ParseError("malformed size line", lineno);
  const std::size_t m = parse_index(size[0], lineno);
  const std::size_t n = parse_index(size[1], lineno);
  if (symmetry != Symmetry::kGeneral && m != n) {
    throw ParseError("symmetric storage requires a square matrix", lineno);
  }

  std::vector<double> data(m * n, 0.0);
  auto store = [&](std::size_t i, std::size_t j, double v) {
    data[j * m + i] = v;
    if (i != j) {
      if (symmetry == Symmetry::kSymmetric) data[i * m + j] = v;
      if (symmetry == Symmetry::kSkew) data[i * m + j] = -v;
    }
  };

  if (coordinate) {
    const std::size_t nnz = parse_index(size[2], lineno);
    for (std::size_t e = 0; e < nnz; ++e) {
      if (!next_data_line(in, line, lineno)) {
        throw ParseError("expected " + std::to_string(nnz) + " entries, got " + std::to_string(e),
                         lineno);
      }
      const auto tok = split(line);
      if (tok.size() != 3) throw ParseError("expected 'row col value'", lineno);
      const std::size_t i = parse_index(tok[0], lineno);
      const std::size_t j = parse_index(tok[1], lineno);
      if (i < 1 || i > m || j < 1 || j > n) throw ParseError("entry index out of range", lineno);
      if (symmetry != Symmetry::kGeneral && i < j) {
        throw ParseError("symmetric storage must list the lower triangle", lineno);
      }
      store(i - 1, j - 1, parse_value(tok[2], lineno));
    }
  } else {
    // Column-major; symmetric variants list only the lower triangle
    // (strictly lower for skew-symmetric).
    std::vector<std::array<std::size_t, 2>> order;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t first = symmetry == Symmetry::kGeneral ? 0
                                : symmetry == Symmetry::kSkew  ? j + 1
                                                               : j;
      for (std::size_t i = first; i < m; ++i) order.push_back({i, j});
    }
    std::size_t pos = 0;
    while (pos < order.size()) {
      if (!next_data_line(in, line, lineno)) {
        throw ParseError("expected " + std::to_string(order.size()) + " values, got " +
                             std::to_string(pos),
                         lineno);
      }
      for (auto tok : split(line)) {
        if (pos == order.size()) throw ParseError("too many values", lineno);
        store(order[pos][0], order[pos][1], parse_value(tok, lineno));
        ++pos;
      }
    }
  }
  if (next_data_line(in, line, lineno)) throw ParseError("trailing data", lineno);
  return DenseMatrix(m, n, std::move(data));
}

DenseMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_matrix_market(in);
}

void write_matrix_market(const DenseMatrix& a, std::ostream& out) {
  out << "%%MatrixMarket matrix array real general\n" << a.rows() << ' ' << a.cols() << '\n';
  std::array<char, 32> buf{};
  for (double v : a.data()) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    out.write(buf.data(), ptr - buf.data());
    out << '\n';
  }
}

void write_matrix_market(const DenseMatrix& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_matrix_market(a, out);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace rrge
