#include "rrge/lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "rrge/error.hpp"

namespace rrge {

namespace {

double one_norm(const DenseMatrix& a) {
  double norm = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (double v : a.column(j)) s += std::abs(v);
    norm = std::max(norm, s);
  }
  return norm;
}

}  // namespace

PivotedLu::PivotedLu(const DenseMatrix& a, SingularityCheck check) : n_(a.rows()), lu_(a) {
  if (a.rows() != a.cols()) throw InvalidArgument("PivotedLu: matrix not square");
  row_perm_.resize(n_);
  col_perm_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) row_perm_[i] = col_perm_[i] = i;

  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    double best = -1.0;
    for (std::size_t j = k; j < n_; ++j)
      for (std::size_t i = k; i < n_; ++i)
        if (std::abs(lu_(i, j)) > best) {
          best = std::abs(lu_(i, j));
          pr = i;
          pc = j;
        }
    if (best == 0.0) throw SingularMatrix("PivotedLu: matrix is exactly singular");
    if (pr != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(pr, j));
      std::swap(row_perm_[k], row_perm_[pr]);
      sign_ = -sign_;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n_; ++i) std::swap(lu_(i, k), lu_(i, pc));
      std::swap(col_perm_[k], col_perm_[pc]);
      sign_ = -sign_;
    }
    const double piv = lu_(k, k);
    pivots_.push_back(piv);
    for (std::size_t i = k + 1; i < n_; ++i) lu_(i, k) /= piv;
    for (std::size_t j = k + 1; j < n_; ++j) {
      const double ukj = lu_(k, j);
      if (ukj == 0.0) continue;
      for (std::size_t i = k + 1; i < n_; ++i) lu_(i, j) -= lu_(i, k) * ukj;
    }
  }

  if (n_ > 0) {
    const double norm_inv = one_norm(inverse());
    cond1_ = one_norm(a) * norm_inv;
    const bool too_ill = check == SingularityCheck::kConditionNumber &&
                         cond1_ > 1.0 / std::numeric_limits<double>::epsilon();
    if (!std::isfinite(cond1_) || too_ill) {
      throw SingularMatrix("PivotedLu: matrix is singular to working precision");
    }
  }
}

std::vector<double> PivotedLu::solve(std::span<const double> b) const {
  if (b.size() != n_) throw InvalidArgument("PivotedLu::solve: length mismatch");
  std::vector<double> y(n_);
  for (std::size_t i = 0; i < n_; ++i) y[i] = b[row_perm_[i]];
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = j + 1; i < n_; ++i) y[i] -= lu_(i, j) * y[j];
  for (std::size_t jj = n_; jj-- > 0;) {
    y[jj] /= lu_(jj, jj);
    for (std::size_t i = 0; i < jj; ++i) y[i] -= lu_(i, jj) * y[jj];
  }
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[col_perm_[i]] = y[i];
  return x;
}

std::vector<double> PivotedLu::solve_transposed(std::span<const double> b) const {
  // A^T = Q U^T L^T P, so solve U^T z = Q^T b, then L^T w = z, then x = P^T w.
  if (b.size() != n_) throw InvalidArgument("PivotedLu::solve_transposed: length mismatch");
  std::vector<double> z(n_);
  for (std::size_t i = 0; i < n_; ++i) z[i] = b[col_perm_[i]];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) z[i] -= lu_(j, i) * z[j];
    z[i] /= lu_(i, i);
  }
  for (std::size_t ii = n_; ii-- > 0;)
    for (std::size_t j = ii + 1; j < n_; ++j) z[ii] -= lu_(j, ii) * z[j];
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[row_perm_[i]] = z[i];
  return x;
}

DenseMatrix PivotedLu::solve(const DenseMatrix& b) const {
  if (b.rows() != n_) throw InvalidArgument("PivotedLu::solve: row count mismatch");
  DenseMatrix x(n_, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(b.column(j));
    std::copy(col.begin(), col.end(), x.column(j).begin());
  }
  return x;
}

DenseMatrix PivotedLu::right_solve(const DenseMatrix& b) const {
  if (b.cols() != n_) throw InvalidArgument("PivotedLu::right_solve: column count mismatch");
  DenseMatrix x(b.rows(), n_);
  std::vector<double> row(n_);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) row[j] = b(i, j);
    auto sol = solve_transposed(row);
    for (std::size_t j = 0; j < n_; ++j) x(i, j) = sol[j];
  }
  return x;
}

DenseMatrix PivotedLu::inverse() const { return solve(DenseMatrix::identity(n_)); }

double PivotedLu::determinant() const noexcept {
  double det = sign_;
  for (double p : pivots_) det *= p;
  return det;
}

}  // namespace rrge
