#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rrge {

/// Strictly ascending list of distinct 0-based indices into one axis of a
/// matrix. Bounds against the axis are checked where the set is used.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices);

  /// {begin, begin+1, ..., end-1}
  static IndexSet range(std::size_t begin, std::size_t end);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t pos) const { return indices_[pos]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  const std::vector<std::size_t>& values() const noexcept { return indices_; }

  bool contains(std::size_t index) const;
  /// Largest index + 1, or 0 for the empty set.
  std::size_t extent() const noexcept { return indices_.empty() ? 0 : indices_.back() + 1; }

  /// Indices of [0, n) not in this set.
  IndexSet complement(std::size_t n) const;
  /// Maps positions of `inner` through this set: result[i] = (*this)[inner[i]].
  IndexSet compose(const IndexSet& inner) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Dense real matrix stored column-major in one contiguous buffer.
///
/// Constructors reject NaN and infinite entries. Element access through
/// operator() is unchecked; use at() for bounds-checked reads.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// `column_major` must hold rows*cols finite values.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major);

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[j * rows_ + i]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[j * rows_ + i]; }
  double at(std::size_t i, std::size_t j) const;

  std::span<const double> column(std::size_t j) const noexcept {
    return {data_.data() + j * rows_, rows_};
  }
  std::span<double> column(std::size_t j) noexcept { return {data_.data() + j * rows_, rows_}; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

/// Chebyshev norm: the maximum absolute entry, 0 for an empty matrix.
double max_abs_norm(const DenseMatrix& a) noexcept;
double frobenius_norm(const DenseMatrix& a) noexcept;

/// Submatrix a(rows, cols). Throws InvalidArgument on out-of-range indices.
DenseMatrix select(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols);
DenseMatrix select_rows(const DenseMatrix& a, const IndexSet& rows);
DenseMatrix select_cols(const DenseMatrix& a, const IndexSet& cols);

/// Determinant by permutation expansion. Test oracle only; k <= 8.
double det_bruteforce(const DenseMatrix& a);

}  // namespace rrge
