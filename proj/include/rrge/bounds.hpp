#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "rrge/engine.hpp"
#include "rrge/matrix.hpp"

namespace rrge {

/// Relative slack applied to every certified inequality.
inline constexpr double kCertificateSlack = 1e-8;

/// Audit of a RankRevealResult against its guaranteed bounds. Every quantity
/// is recomputed from A and the index sets.
struct BoundCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  double rho = 0.0;
  double beta = 0.0;

  // beta bounds
  double schur_norm_c = 0.0;   ///< ||A/A11||_C
  double inv_norm_c = 0.0;     ///< ||A11^{-1}||_C
  double rho_beta = 0.0;       ///< rho * beta
  double rho_over_beta = 0.0;  ///< rho / beta
  double block_row_norm_c = 0.0;  ///< ||A11^{-1} A12||_C
  double block_col_norm_c = 0.0;  ///< ||A21 A11^{-1}||_C
  bool betabound_passed = false;

  // singular value bounds
  double sigma_min_a11 = 0.0;
  double sigma_r = 0.0;
  double sigma_r_plus_1 = 0.0;
  double schur_norm_2 = 0.0;
  double lower_bound_factor = 0.0;
  double upper_bound_factor = 0.0;
  /// Values below this are numerically zero: max(m, n) * eps * sigma_1(A).
  double noise_floor = 0.0;
  bool theorem_checked = false;
  bool theorem_passed = false;

  bool passed = false;
  /// First failed inequality, empty when passed.
  std::string failure;
};

/// 1 / (2 rho^2 r sqrt((m - r + 1)(n - r + 1))).
double lower_bound_factor(double rho, std::size_t r, std::size_t m, std::size_t n);
/// 2 rho^2 (r + 1) sqrt((m - r)(n - r)).
double upper_bound_factor(double rho, std::size_t r, std::size_t m, std::size_t n);

/// Checks ||A/A11||_C <= rho*beta and ||A11^{-1}||_C <= rho/beta, plus the
/// block-row and block-column bounds ||A11^{-1}A12||_C, ||A21 A11^{-1}||_C <= rho.
BoundCertificate verify_betabound(const DenseMatrix& a, const RankRevealResult& result);

/// verify_betabound plus the interlacing and local-maximum-volume singular
/// value bounds for A11 and A/A11. The upper pair is skipped when
/// r = min(m, n).
BoundCertificate verify_theorem_bounds(const DenseMatrix& a, const RankRevealResult& result);

struct SvdComparison {
  std::size_t r = 0;  ///< rank from the elimination
  std::size_t s = 0;  ///< rank from the SVD tolerance
  std::optional<double> ratio_r;   ///< sigma_r(A) / sigma_s(A)
  std::optional<double> ratio_r1;  ///< sigma_{r+1}(A) / sigma_{s+1}(A)
  std::optional<double> sigma_ratio;  ///< sigma_min(A11) / sigma_r(A)
  double pivot_ratio = 1.0;           ///< pivots / r
  double sigma_min_a11 = 0.0;
  double sigma_r = 0.0;
  std::string sigma_ratio_bucket;
  std::string pivot_ratio_bucket;
};

SvdComparison compare_with_svd(const DenseMatrix& a, const RankRevealResult& result);

/// Bucket labels over sigma_min(A11)/sigma_r(A):
/// "(1e-1,1e0]", "(1e-2,1e-1]", "(1e-3,1e-2]", "<=1e-3".
std::string sigma_ratio_bucket(double ratio);
/// Bucket labels over pivots/r:
/// "[1.00,1.05)", "[1.05,1.50)", "[1.5,4.0)", "[4.0,5.0)", ">=5.0".
std::string pivot_ratio_bucket(double ratio);

}  // namespace rrge
