#include "rrge/volume.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rrge/error.hpp"
#include "rrge/lu.hpp"
#include "rrge/svd.hpp"

namespace rrge {

namespace {

void require_square(const DenseMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and nonempty");
  }
}

bool exceeds(double ratio, double rho) { return ratio > rho * (1.0 + kVolumeTieSlack); }

void check_selection(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                     double rho, const char* what) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw InvalidArgument(std::string(what) + ": block must be square and nonempty");
  }
  if (rows.extent() > a.rows() || cols.extent() > a.cols()) {
    throw InvalidArgument(std::string(what) + ": index out of range");
  }
  if (!(rho >= 1.0)) throw InvalidArgument(std::string(what) + ": rho must be >= 1");
}

}  // namespace

double col_replace_ratio(const DenseMatrix& a11, std::size_t j, std::span<const double> b) {
  require_square(a11, "col_replace_ratio");
  if (j >= a11.cols()) throw InvalidArgument("col_replace_ratio: column index out of range");
  const PivotedLu lu(a11);
  return std::abs(lu.solve(b)[j]);
}

double remove_rowcol_ratio(const DenseMatrix& ahat, std::size_t i, std::size_t j) {
  require_square(ahat, "remove_rowcol_ratio");
  if (i >= ahat.rows() || j >= ahat.cols()) {
    throw InvalidArgument("remove_rowcol_ratio: index out of range");
  }
  const PivotedLu lu(ahat);
  std::vector<double> ei(ahat.rows(), 0.0);
  ei[i] = 1.0;
  return std::abs(lu.solve(ei)[j]);
}

double swap_rowcol_ratio(const DenseMatrix& a11, std::span<const double> b,
                         std::span<const double> c, double alpha, std::size_t i, std::size_t j) {
  require_square(a11, "swap_rowcol_ratio");
  const std::size_t k = a11.rows();
  if (i >= k || j >= k) throw InvalidArgument("swap_rowcol_ratio: index out of range");
  if (b.size() != k || c.size() != k) {
    throw InvalidArgument("swap_rowcol_ratio: border vector length mismatch");
  }
  const PivotedLu lu(a11);
  const std::vector<double> x = lu.solve(b);
  const std::vector<double> y = lu.solve_transposed(c);
  double gamma = alpha;
  for (std::size_t l = 0; l < k; ++l) gamma -= c[l] * x[l];
  std::vector<double> ei(k, 0.0);
  ei[i] = 1.0;
  const double inv_ji = lu.solve(ei)[j];
  return std::abs(gamma * inv_ji + x[j] * y[i]);
}

bool is_local_max_volume(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                         double rho) {
  check_selection(a, rows, cols, rho, "is_local_max_volume");
  const std::size_t k = rows.size();
  const PivotedLu lu(select(a, rows, cols));
  const IndexSet other_rows = rows.complement(a.rows());
  const IndexSet other_cols = cols.complement(a.cols());

  // X = A11^{-1} A12: column exchanges within the block row.
  const DenseMatrix x = lu.solve(select(a, rows, other_cols));
  if (exceeds(max_abs_norm(x), rho)) return false;
  // Y = A21 A11^{-1}: row exchanges within the block column.
  const DenseMatrix y = lu.right_solve(select(a, other_rows, cols));
  if (exceeds(max_abs_norm(y), rho)) return false;

  if (k >= std::min(a.rows(), a.cols())) return true;

  // Combined exchanges over every bordering (row, column) pair. gamma is the
  // matching entry of the Schur complement A22 - A21 X.
  const DenseMatrix inv = lu.inverse();
  for (std::size_t cc = 0; cc < other_cols.size(); ++cc) {
    for (std::size_t rr = 0; rr < other_rows.size(); ++rr) {
      double gamma = a(other_rows[rr], other_cols[cc]);
      for (std::size_t l = 0; l < k; ++l) gamma -= y(rr, l) * a(rows[l], other_cols[cc]);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
          const double ratio = std::abs(gamma * inv(j, i) + x(j, cc) * y(rr, i));
          if (exceeds(ratio, rho)) return false;
        }
      }
    }
  }
  return true;
}

bool is_normal_max_volume(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                          double rho) {
  check_selection(a, rows, cols, rho, "is_normal_max_volume");
  const DenseMatrix a_cols = select_cols(a, cols);
  const double base = volume(a_cols);
  const SvdResult svd = singular_values(a_cols);
  if (numerical_rank_svd(svd, a_cols.rows(), a_cols.cols()) < cols.size()) {
    throw SingularMatrix("is_normal_max_volume: column subset is rank deficient");
  }

  const IndexSet other_cols = cols.complement(a.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t c : other_cols) {
      std::vector<std::size_t> swapped = cols.values();
      swapped.erase(swapped.begin() + static_cast<std::ptrdiff_t>(j));
      swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), c), c);
      if (exceeds(volume(select_cols(a, IndexSet(std::move(swapped)))) / base, rho)) {
        return false;
      }
    }
  }

  // Row exchanges of the block inside A(:, cols): |A21 A11^{-1}|_C <= rho.
  const PivotedLu lu(select(a, rows, cols));
  const DenseMatrix y = lu.right_solve(select(a, rows.complement(a.rows()), cols));
  return !exceeds(max_abs_norm(y), rho);
}

}  // namespace rrge
