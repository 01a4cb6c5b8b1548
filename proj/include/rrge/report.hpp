#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "rrge/bounds.hpp"
#include "rrge/engine.hpp"

namespace rrge {

/// One line of the comparison report. Absent optionals are written as empty
/// fields.
struct ReportRow {
  std::string name;
  std::size_t m = 0;
  std::size_t n = 0;
  double rho = 0.0;
  double beta = 0.0;
  std::size_t rank_rrge = 0;
  std::size_t rank_svd = 0;
  std::size_t pivots = 0;
  double pivot_ratio = 0.0;
  std::optional<double> sigma_min_a11;
  std::optional<double> sigma_r;
  std::optional<double> sigma_r_ratio;
  std::optional<double> ratio_fig1_r;
  std::optional<double> ratio_fig1_r1;
  double schur_norm_c = 0.0;
  bool betabound_pass = false;
  bool theorem_pass = false;
  std::optional<double> elapsed_ms;
  /// Set when the run failed; numeric fields are then left empty and both
  /// pass columns read "error".
  std::optional<std::string> error;
};

inline constexpr const char* kCsvHeader =
    "name,m,n,rho,beta,rank_rrge,rank_svd,pivots,pivot_ratio,sigma_min_a11,sigma_r,"
    "sigma_r_ratio,ratio_fig1_r,ratio_fig1_r1,schur_norm_c,betabound_pass,theorem_pass,"
    "elapsed_ms";

ReportRow make_report_row(std::string name, const DenseMatrix& a, const RankRevealResult& result,
                          const BoundCertificate& cert, const SvdComparison& cmp,
                          std::optional<double> elapsed_ms = std::nullopt);

/// Shortest round-trip free formatting at 17 significant digits, C locale.
std::string format_double(double v);

void write_csv_row(const ReportRow& row, std::ostream& out);
void write_csv_report(std::span<const ReportRow> rows, std::ostream& out);
void write_csv_report(std::span<const ReportRow> rows, const std::filesystem::path& path);

/// Appends one row, writing the header first when the file is new or empty.
void append_csv_row(const ReportRow& row, const std::filesystem::path& path);

}  // namespace rrge
