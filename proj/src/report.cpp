#include "rrge/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "rrge/error.hpp"

namespace rrge {

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::array<char, 32> buf{};
  auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

ReportRow make_report_row(std::string name, const DenseMatrix& a, const RankRevealResult& result,
                          const BoundCertificate& cert, const SvdComparison& cmp,
                          std::optional<double> elapsed_ms) {
  ReportRow row;
  row.name = std::move(name);
  row.m = a.rows();
  row.n = a.cols();
  row.rho = result.rho_used;
  row.beta = result.beta_used;
  row.rank_rrge = result.rank;
  row.rank_svd = cmp.s;
  row.pivots = result.pivot_count;
  row.pivot_ratio = cmp.pivot_ratio;
  if (result.rank > 0) {
    row.sigma_min_a11 = cmp.sigma_min_a11;
    row.sigma_r = cmp.sigma_r;
    row.sigma_r_ratio = cmp.sigma_ratio;
  }
  row.ratio_fig1_r = cmp.ratio_r;
  row.ratio_fig1_r1 = cmp.ratio_r1;
  row.schur_norm_c = cert.schur_norm_c;
  row.betabound_pass = cert.betabound_passed;
  row.theorem_pass = cert.theorem_passed;
  row.elapsed_ms = elapsed_ms;
  return row;
}

void write_csv_row(const ReportRow& r, std::ostream& out) {
  out << quote_if_needed(r.name) << ',' << r.m << ',' << r.n << ',' << format_double(r.rho)
      << ',';
  if (r.error) {
    out << ",,,,,,,,,,,error,error," << field(r.elapsed_ms) << '\n';
    return;
  }
  out << format_double(r.beta) << ',' << r.rank_rrge << ',' << r.rank_svd << ',' << r.pivots
        << ',' << format_double(r.pivot_ratio) << ',' << field(r.sigma_min_a11) << ','
        << field(r.sigma_r) << ',' << field(r.sigma_r_ratio) << ',' << field(r.ratio_fig1_r)
        << ',' << field(r.ratio_fig1_r1) << ',' << format_double(r.schur_norm_c) << ','
        << (r.betabound_pass ? "true" : "false") << ',' << (r.theorem_pass ? "true" : "false")
        << ',' << field(r.elapsed_ms) << '\n';
}

void write_csv_report(std::span<const ReportRow> rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ReportRow& r : rows) write_csv_row(r, out);
}

void write_csv_report(std::span<const ReportRow> rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_csv_report(rows, out);
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

void append_csv_row(const ReportRow& row, const std::filesystem::path& path) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  if (fresh) out << kCsvHeader << '\n';
  write_csv_row(row, out);
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace rrge
