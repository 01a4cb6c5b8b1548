#pragma once

#include <cstddef>
#include <span>

#include "rrge/matrix.hpp"

namespace rrge {

/// Relative slack before an exchange ratio counts as exceeding rho.
inline constexpr double kVolumeTieSlack = 1e-12;

/// vol(A11') / vol(A11) where A11' replaces column j of A11 by b.
/// Equals |(A11^{-1} b)_j|.
double col_replace_ratio(const DenseMatrix& a11, std::size_t j, std::span<const double> b);

/// vol(B) / vol(Ahat) where B deletes row i and column j of Ahat.
/// Equals |(Ahat^{-1})_{j,i}|.
double remove_rowcol_ratio(const DenseMatrix& ahat, std::size_t i, std::size_t j);

/// Volume ratio for the bordered matrix [[A11, b], [c^T, alpha]] when row k+1
/// is exchanged with row i and column k+1 with column j:
///
///   |gamma (A11^{-1})_{j,i} + (A11^{-1} b)_j (A11^{-T} c)_i|,
///   gamma = alpha - c^T A11^{-1} b.
///
/// Valid whether or not the bordered matrix is singular.
double swap_rowcol_ratio(const DenseMatrix& a11, std::span<const double> b,
                         std::span<const double> c, double alpha, std::size_t i, std::size_t j);

/// True iff no single row exchange, column exchange, or combined row and
/// column exchange raises vol(A(rows, cols)) by more than a factor rho.
/// When |rows| = min(m, n) only the pure row/column exchanges exist.
/// Throws SingularMatrix when the block is singular.
bool is_local_max_volume(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                         double rho);

/// Two-stage property: the column subset has local rho-maximum volume among
/// column subsets (single-column exchanges, volumes from the SVD), and the
/// block has local rho-maximum volume inside A(:, cols) under single-row
/// exchanges. Brute force; intended for matrices up to 16 x 16.
bool is_normal_max_volume(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                          double rho);

}  // namespace rrge
