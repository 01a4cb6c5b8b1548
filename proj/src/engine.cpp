#include "rrge/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rrge/svd.hpp"

namespace rrge {

namespace {

constexpr double kPivotFloorFactor = 1e-12;

}  // namespace

const char* to_string(PivotTier tier) noexcept {
  switch (tier) {
    case PivotTier::kShrink:
      return "shrink";
    case PivotTier::kExchange:
      return "exchange";
    case PivotTier::kGrow:
      return "grow";
  }
  return "?";
}

IterationLimitExceeded::IterationLimitExceeded(std::size_t limit, std::vector<PivotRecord> log)
    : Error("find_submatrix: pivot limit " + std::to_string(limit) +
            " exceeded (floating-point cycling)"),
      log_(std::move(log)) {}

BasisState::BasisState(const DenseMatrix& a, double rho, double beta)
    : m_(a.rows()),
      n_(a.cols()),
      rho_(rho),
      beta_(beta),
      a_(a),
      w_(a.rows(), a.cols() + a.rows()),
      basic_(a.rows()),
      in_basis_(a.cols() + a.rows(), false) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) throw InvalidArgument("rho must be finite and >= 1");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("beta must be finite and > 0");
  norm_c_ = max_abs_norm(a);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < m_; ++i) w_(i, j) = a(i, j);
  for (std::size_t i = 0; i < m_; ++i) {
    w_(i, n_ + i) = 1.0;
    basic_[i] = n_ + i;
    in_basis_[n_ + i] = true;
  }
}

// Stored entries carry the units of A in the grow block, of 1/A in the shrink
// block and none in the exchange blocks.
double BasisState::pivot_floor(PivotTier tier) const noexcept {
  switch (tier) {
    case PivotTier::kGrow:
      return std::min(kPivotFloorFactor * norm_c_, rho_ * beta_);
    case PivotTier::kExchange:
      return kPivotFloorFactor;
    case PivotTier::kShrink:
      return norm_c_ > 0.0 ? kPivotFloorFactor / norm_c_ : 0.0;
  }
  return 0.0;
}

PivotTier BasisState::tier_of(std::size_t p, std::size_t q) const {
  const bool row_structural = is_structural(basic_.at(p));
  const bool col_structural = is_structural(q);
  if (row_structural && !col_structural) return PivotTier::kShrink;
  if (!row_structural && col_structural) return PivotTier::kGrow;
  return PivotTier::kExchange;
}

double BasisState::threshold(PivotTier tier) const noexcept {
  switch (tier) {
    case PivotTier::kShrink:
      return rho_ / beta_;
    case PivotTier::kExchange:
      return rho_;
    case PivotTier::kGrow:
      return rho_ * beta_;
  }
  return rho_;
}

double BasisState::read_scaled_entry(std::size_t p, std::size_t q) const {
  if (p >= m_ || q >= n_ + m_) throw InvalidArgument("read_scaled_entry: index out of range");
  if (in_basis_[q]) throw InvalidArgument("read_scaled_entry: column is basic");
  const double w = w_(p, q);
  switch (tier_of(p, q)) {
    case PivotTier::kShrink:
      return w * beta_;
    case PivotTier::kGrow:
      return w / beta_;
    case PivotTier::kExchange:
      break;
  }
  return w;
}

std::optional<PivotChoice> BasisState::choose_pivot() const {
  struct Best {
    double value = -1.0;
    std::size_t p = 0;
    std::size_t q = 0;
  };
  Best best[3];
  const double limits[3] = {threshold(PivotTier::kShrink), threshold(PivotTier::kExchange),
                            threshold(PivotTier::kGrow)};
  for (std::size_t p = 0; p < m_; ++p) {
    const bool row_structural = is_structural(basic_[p]);
    for (std::size_t q = 0; q < n_ + m_; ++q) {
      if (in_basis_[q]) continue;
      const bool col_structural = q < n_;
      const int t = row_structural == col_structural ? 1 : (row_structural ? 0 : 2);
      const double v = std::abs(w_(p, q));
      if (v > limits[t] && v > best[t].value) best[t] = {v, p, q};
    }
  }
  for (int t = 0; t < 3; ++t) {
    if (best[t].value >= 0.0) {
      return PivotChoice{best[t].p, best[t].q, static_cast<PivotTier>(t + 1)};
    }
  }
  return std::nullopt;
}

void BasisState::apply_pivot(std::size_t p, std::size_t q) {
  if (p >= m_ || q >= n_ + m_) throw InvalidArgument("apply_pivot: index out of range");
  if (in_basis_[q]) throw InvalidArgument("apply_pivot: entering column is already basic");
  const double pivot = w_(p, q);
  const PivotTier tier = tier_of(p, q);
  if (!std::isfinite(pivot) || !(std::abs(pivot) > pivot_floor(tier)) || pivot == 0.0) {
    throw NumericalBreakdown("apply_pivot: pivot " + std::to_string(pivot) + " at (" +
                             std::to_string(p) + ", " + std::to_string(q) +
                             ") below floor");
  }
  const double magnitude = std::abs(read_scaled_entry(p, q));
  const std::size_t cols = n_ + m_;

  for (std::size_t j = 0; j < cols; ++j) w_(p, j) /= pivot;
  w_(p, q) = 1.0;
  flops_ += cols;
  for (std::size_t i = 0; i < m_; ++i) {
    if (i == p) continue;
    const double factor = w_(i, q);
    if (factor == 0.0) continue;
    for (std::size_t j = 0; j < cols; ++j) w_(i, j) -= factor * w_(p, j);
    w_(i, q) = 0.0;
    flops_ += 2 * cols;
  }

  const std::size_t leaving = basic_[p];
  in_basis_[leaving] = false;
  in_basis_[q] = true;
  basic_[p] = q;
  if (is_structural(q)) ++k_;
  if (is_structural(leaving)) --k_;
  log_.push_back(PivotRecord{p, q, leaving, magnitude, tier});
}

IndexSet BasisState::structural_basics() const {
  std::vector<std::size_t> cols;
  for (std::size_t q = 0; q < n_; ++q)
    if (in_basis_[q]) cols.push_back(q);
  return IndexSet(std::move(cols));
}

IndexSet BasisState::covered_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m_; ++i)
    if (!in_basis_[n_ + i]) rows.push_back(i);
  return IndexSet(std::move(rows));
}

DenseMatrix BasisState::schur_complement() const {
  // Tableau row holding logical basic column n + i, for each uncovered row i.
  std::vector<std::size_t> row_of(m_, m_);
  for (std::size_t p = 0; p < m_; ++p)
    if (!is_structural(basic_[p])) row_of[basic_[p] - n_] = p;
  const IndexSet rows = covered_rows().complement(m_);
  const IndexSet cols = structural_basics().complement(n_);
  DenseMatrix s(rows.size(), cols.size());
  for (std::size_t jj = 0; jj < cols.size(); ++jj)
    for (std::size_t ii = 0; ii < rows.size(); ++ii) s(ii, jj) = w_(row_of[rows[ii]], cols[jj]);
  return s;
}

DenseMatrix BasisState::basis_matrix() const {
  DenseMatrix b(m_, m_);
  for (std::size_t p = 0; p < m_; ++p) {
    const std::size_t q = basic_[p];
    if (is_structural(q)) {
      for (std::size_t i = 0; i < m_; ++i) b(i, p) = a_(i, q);
    } else {
      b(q - n_, p) = beta_;
    }
  }
  return b;
}

double BasisState::unit_column_defect() const {
  double defect = 0.0;
  for (std::size_t p = 0; p < m_; ++p) {
    const std::size_t q = basic_[p];
    for (std::size_t i = 0; i < m_; ++i) {
      const double expected = i == p ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(w_(i, q) - expected));
    }
  }
  return defect;
}

double default_beta(const DenseMatrix& a) noexcept {
  return static_cast<double>(std::max(a.rows(), a.cols())) * kMachineEpsilon * max_abs_norm(a);
}

std::size_t iteration_cap(std::size_t rows, std::size_t cols) noexcept {
  return 50 * std::min(rows, cols) + 100;
}

RankRevealResult find_submatrix(const DenseMatrix& a, double rho, double beta) {
  const bool transposed = a.rows() > a.cols();
  const DenseMatrix work = transposed ? transpose(a) : a;

  BasisState state(work, rho, beta);
  const std::size_t cap = iteration_cap(work.rows(), work.cols());
  while (auto choice = state.choose_pivot()) {
    if (state.pivot_log().size() >= cap) throw IterationLimitExceeded(cap, state.pivot_log());
    state.apply_pivot(choice->row, choice->column);
  }

  RankRevealResult result;
  result.rank = state.rank();
  result.row_set = state.covered_rows();
  result.col_set = state.structural_basics();
  result.schur = state.schur_complement();
  if (transposed) {
    std::swap(result.row_set, result.col_set);
    result.schur = transpose(result.schur);
  }
  result.a11 = select(a, result.row_set, result.col_set);
  result.pivot_count = state.pivot_log().size();
  result.beta_used = beta;
  result.rho_used = rho;
  result.flops = state.flops();
  result.transposed = transposed;
  result.pivot_log = state.pivot_log();
  return result;
}

RankRevealResult reveal_rank(const DenseMatrix& a, double rho, std::optional<double> beta) {
  if (beta) return find_submatrix(a, rho, *beta);
  const double b = default_beta(a);
  if (b > 0.0) return find_submatrix(a, rho, b);

  if (!(rho >= 1.0) || !std::isfinite(rho)) throw InvalidArgument("rho must be finite and >= 1");
  RankRevealResult result;
  result.schur = a;
  result.rho_used = rho;
  result.transposed = a.rows() > a.cols();
  return result;
}

}  // namespace rrge
