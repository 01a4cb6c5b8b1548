#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rrge/matrix.hpp"

namespace rrge {

/// Unit roundoff used throughout for tolerances, 2^-52.
inline constexpr double kMachineEpsilon = std::numeric_limits<double>::epsilon();

struct SvdResult {
  /// Nonincreasing, length min(m, n).
  std::vector<double> singular_values;

  /// sigma_k with 1-based k; sigma_{d+1} and beyond are 0 by convention.
  double sigma(std::size_t k) const noexcept {
    return k >= 1 && k <= singular_values.size() ? singular_values[k - 1] : 0.0;
  }
  double largest() const noexcept { return sigma(1); }
  double smallest() const noexcept {
    return singular_values.empty() ? 0.0 : singular_values.back();
  }
};

/// Singular values by one-sided Jacobi rotations on the columns of the taller
/// orientation. Deterministic; no singular vectors are formed.
SvdResult singular_values(const DenseMatrix& a);

/// Product of all min(m, n) singular values.
double volume(const DenseMatrix& a);

double spectral_norm(const DenseMatrix& a);

/// Largest s with sigma_s >= max(m, n) * eps * sigma_1; 0 for the zero matrix.
std::size_t numerical_rank_svd(const DenseMatrix& a);
std::size_t numerical_rank_svd(const SvdResult& svd, std::size_t rows, std::size_t cols);

}  // namespace rrge
