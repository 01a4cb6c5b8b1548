#include "rrge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rrge/error.hpp"

namespace rrge {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i - 1] >= indices_[i]) {
      throw InvalidArgument("IndexSet: indices must be strictly ascending");
    }
  }
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet IndexSet::range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end > begin ? end - begin : 0);
  std::iota(v.begin(), v.end(), begin);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSet IndexSet::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n > size() ? n - size() : 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pos < indices_.size() && indices_[pos] == i) {
      ++pos;
    } else {
      out.push_back(i);
    }
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::compose(const IndexSet& inner) const {
  if (inner.extent() > size()) {
    throw InvalidArgument("IndexSet::compose: inner index out of range");
  }
  std::vector<std::size_t> out;
  out.reserve(inner.size());
  for (std::size_t p : inner) out.push_back(indices_[p]);
  return IndexSet(std::move(out));
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
    : rows_(rows), cols_(cols), data_(std::move(column_major)) {
  if (data_.size() != rows * cols) {
    throw InvalidArgument("DenseMatrix: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidArgument("DenseMatrix: non-finite entry");
  }
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<double> buf(m * n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("DenseMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (double v : row) buf[j++ * m + i] = v;
    ++i;
  }
  return DenseMatrix(m, n, std::move(buf));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
  return a;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix a(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw InvalidArgument("DenseMatrix: non-finite entry");
    a(i, i) = values[i];
  }
  return a;
}

double DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InvalidArgument("DenseMatrix::at: index out of range");
  return (*this)(i, j);
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto cj = c.column(j);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double blj = b(l, j);
      if (blj == 0.0) continue;
      auto al = a.column(l);
      for (std::size_t i = 0; i < a.rows(); ++i) cj[i] += al[i] * blj;
    }
  }
  return c;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw InvalidArgument("multiply: vector length mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto aj = a.column(j);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += aj[i] * x[j];
  }
  return y;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("subtract: dimensions differ");
  }
  DenseMatrix c = a;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) -= b(i, j);
  return c;
}

double max_abs_norm(const DenseMatrix& a) noexcept {
  double norm = 0.0;
  for (double v : a.data()) norm = std::max(norm, std::abs(v));
  return norm;
}

double frobenius_norm(const DenseMatrix& a) noexcept {
  // scaled sum of squares, as in LAPACK's dnrm2
  double scale = 0.0;
  double ssq = 1.0;
  for (double v : a.data()) {
    if (v == 0.0) continue;
    const double x = std::abs(v);
    if (scale < x) {
      ssq = 1.0 + ssq * (scale / x) * (scale / x);
      scale = x;
    } else {
      ssq += (x / scale) * (x / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

namespace {

void check_bounds(const IndexSet& set, std::size_t n, const char* axis) {
  if (set.extent() > n) {
    throw InvalidArgument(std::string("select: ") + axis + " index " +
                          std::to_string(set.extent() - 1) + " out of range (dimension " +
                          std::to_string(n) + ")");
  }
}

}  // namespace

DenseMatrix select(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  check_bounds(rows, a.rows(), "row");
  check_bounds(cols, a.cols(), "column");
  DenseMatrix s(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) s(i, j) = a(rows[i], cols[j]);
  return s;
}

DenseMatrix select_rows(const DenseMatrix& a, const IndexSet& rows) {
  return select(a, rows, IndexSet::range(0, a.cols()));
}

DenseMatrix select_cols(const DenseMatrix& a, const IndexSet& cols) {
  return select(a, IndexSet::range(0, a.rows()), cols);
}

double det_bruteforce(const DenseMatrix& a) {
  const std::size_t k = a.rows();
  if (a.cols() != k) throw InvalidArgument("det_bruteforce: matrix not square");
  if (k > 8) throw InvalidArgument("det_bruteforce: dimension above 8");
  if (k == 0) return 1.0;

  // Sum over permutations in lexicographic order; parity tracked by counting
  // inversions, which is cheap at k <= 8.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0.0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    double term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < k && term != 0.0; ++i) term *= a(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace rrge
