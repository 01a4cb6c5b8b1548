#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rrge/error.hpp"
#include "rrge/matrix.hpp"

namespace rrge {

/// Pivot priority classes, highest first. The names describe what the pivot
/// does to the dimension of A11.
enum class PivotTier : int {
  kShrink = 1,    ///< logical column enters, replacing a structural one
  kExchange = 2,  ///< structural for structural, or logical for logical
  kGrow = 3,      ///< structural column enters, replacing a logical one
};

const char* to_string(PivotTier tier) noexcept;

struct PivotChoice {
  std::size_t row;
  std::size_t column;
  PivotTier tier;

  friend bool operator==(const PivotChoice&, const PivotChoice&) = default;
};

struct PivotRecord {
  std::size_t row;
  std::size_t entering;
  std::size_t leaving;
  /// |M_{row,entering}| in the true (beta-scaled) tableau.
  double magnitude;
  PivotTier tier;
};

class IterationLimitExceeded : public Error {
 public:
  IterationLimitExceeded(std::size_t limit, std::vector<PivotRecord> log);
  const std::vector<PivotRecord>& pivot_log() const noexcept { return log_; }

 private:
  std::vector<PivotRecord> log_;
};

/// Basis of the augmented matrix [A  beta*I_m] together with the tableau
///
///   W = Abar_B^{-1} [A  I_m],
///
/// where Abar_B is the basis matrix with logical columns left unscaled.
/// Column q < n is structural (column q of A), column n + i is the logical
/// column e_i. The true tableau entry M(p, q) is W(p, q) scaled by beta when a
/// structural basic row meets a logical column and by 1/beta in the opposite
/// case.
///
/// Starts from the all-logical basis. Not thread-safe; one state per run.
class BasisState {
 public:
  BasisState(const DenseMatrix& a, double rho, double beta);

  std::size_t rows() const noexcept { return m_; }
  std::size_t structural_columns() const noexcept { return n_; }
  std::size_t total_columns() const noexcept { return n_ + m_; }
  /// Number of structural basic columns, i.e. the current dimension of A11.
  std::size_t rank() const noexcept { return k_; }
  double rho() const noexcept { return rho_; }
  double beta() const noexcept { return beta_; }

  bool is_structural(std::size_t q) const noexcept { return q < n_; }
  bool is_basic(std::size_t q) const { return in_basis_.at(q); }
  std::size_t basic(std::size_t p) const { return basic_.at(p); }
  double stored(std::size_t p, std::size_t q) const { return w_.at(p, q); }

  /// True tableau entry (A_B^{-1} A_N)(p, q). Throws InvalidArgument if q is basic.
  double read_scaled_entry(std::size_t p, std::size_t q) const;
  /// Priority class of a nonbasic position (p, q).
  PivotTier tier_of(std::size_t p, std::size_t q) const;

  /// Largest entry violating the rho bound in the highest nonempty tier,
  /// ties to the smallest (p, q); nullopt when the basis is final.
  std::optional<PivotChoice> choose_pivot() const;

  /// Gauss-Jordan step making column q the unit vector e_p. Throws
  /// NumericalBreakdown when W(p, q) is not finite or below the pivot floor:
  /// min(1e-12 ||A||_C, rho beta) for growth pivots, 1e-12 for exchanges and
  /// 1e-12 / ||A||_C for shrinking pivots.
  void apply_pivot(std::size_t p, std::size_t q);

  const std::vector<PivotRecord>& pivot_log() const noexcept { return log_; }
  std::uint64_t flops() const noexcept { return flops_; }

  /// Structural basic columns (column indices of A11), ascending.
  IndexSet structural_basics() const;
  /// Rows of A whose logical column is nonbasic (row indices of A11), ascending.
  IndexSet covered_rows() const;
  /// A/A11 read from the logical-row, structural-column block of W.
  DenseMatrix schur_complement() const;
  /// Basis matrix of [A beta*I], column p holding the basic column of row p.
  DenseMatrix basis_matrix() const;
  /// Max deviation of the basic columns of W from unit vectors.
  double unit_column_defect() const;

 private:
  double threshold(PivotTier tier) const noexcept;
  double pivot_floor(PivotTier tier) const noexcept;

  std::size_t m_;
  std::size_t n_;
  double rho_;
  double beta_;
  double norm_c_;
  DenseMatrix a_;
  DenseMatrix w_;
  std::vector<std::size_t> basic_;
  std::vector<bool> in_basis_;
  std::size_t k_ = 0;
  std::vector<PivotRecord> log_;
  std::uint64_t flops_ = 0;
};

struct RankRevealResult {
  std::size_t rank = 0;
  IndexSet row_set;
  IndexSet col_set;
  DenseMatrix a11;
  /// A22 - A21 A11^{-1} A12 over the complementary rows and columns.
  DenseMatrix schur;
  std::size_t pivot_count = 0;
  double beta_used = 0.0;
  double rho_used = 0.0;
  std::uint64_t flops = 0;
  /// The engine ran on A^T because A has more rows than columns.
  bool transposed = false;
  std::vector<PivotRecord> pivot_log;
};

/// max(m, n) * eps * ||A||_C.
double default_beta(const DenseMatrix& a) noexcept;

/// Pivot budget after which the run is treated as floating-point cycling.
std::size_t iteration_cap(std::size_t rows, std::size_t cols) noexcept;

/// Selects A11 by driving [A beta*I] to a basis whose tableau entries are all
/// bounded by rho. On return ||A/A11||_C <= rho*beta and
/// ||A11^{-1}||_C <= rho/beta. Matrices with more rows than columns are
/// transposed internally; the result always refers to A.
RankRevealResult find_submatrix(const DenseMatrix& a, double rho, double beta);

/// find_submatrix with beta defaulting to default_beta(a). A zero matrix with
/// no explicit beta returns rank 0 without running the engine.
RankRevealResult reveal_rank(const DenseMatrix& a, double rho,
                             std::optional<double> beta = std::nullopt);

}  // namespace rrge
