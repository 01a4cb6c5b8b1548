#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rrge/matrix.hpp"

namespace rrge {

enum class SingularityCheck {
  /// Reject when the 1-norm condition number exceeds 1/eps.
  kConditionNumber,
  /// Reject only an exactly zero pivot.
  kExactZero,
};

/// LU factorization with complete pivoting, P A Q = L U.
///
/// Used wherever A^{-1} must be applied to vectors or blocks: the volume
/// ratio formulas and the certificate recomputations. Construction throws
/// SingularMatrix according to `check`.
class PivotedLu {
 public:
  explicit PivotedLu(const DenseMatrix& a,
                     SingularityCheck check = SingularityCheck::kConditionNumber);

  std::size_t size() const noexcept { return n_; }

  std::vector<double> solve(std::span<const double> b) const;
  /// Solves A^T x = b.
  std::vector<double> solve_transposed(std::span<const double> b) const;

  /// A^{-1} B, column by column.
  DenseMatrix solve(const DenseMatrix& b) const;
  /// B A^{-1}, computed as (A^{-T} B^T)^T.
  DenseMatrix right_solve(const DenseMatrix& b) const;
  DenseMatrix inverse() const;

  double determinant() const noexcept;
  /// Pivots u_11, ..., u_nn in elimination order.
  std::span<const double> pivots() const noexcept { return pivots_; }
  double condition_1norm() const noexcept { return cond1_; }

 private:
  std::size_t n_;
  DenseMatrix lu_;
  std::vector<std::size_t> row_perm_;  // row_perm_[k] = original row at step k
  std::vector<std::size_t> col_perm_;
  std::vector<double> pivots_;
  int sign_ = 1;
  double cond1_ = 1.0;
};

}  // namespace rrge
