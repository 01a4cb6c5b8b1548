#include "rrge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rrge/lu.hpp"
#include "rrge/svd.hpp"

namespace rrge {

namespace {

bool within(double lhs, double rhs, double floor = 0.0) {
  return lhs <= rhs * (1.0 + kCertificateSlack) + floor;
}

std::string describe(const char* what, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": " << lhs << " > " << rhs;
  return os.str();
}

void check_consistency(const DenseMatrix& a, const RankRevealResult& result) {
  const std::size_t r = result.rank;
  if (result.row_set.size() != r || result.col_set.size() != r ||
      result.row_set.extent() > a.rows() || result.col_set.extent() > a.cols() ||
      r > std::min(a.rows(), a.cols()) || result.a11.rows() != r || result.a11.cols() != r ||
      result.schur.rows() != a.rows() - r || result.schur.cols() != a.cols() - r) {
    throw InvalidArgument("certificate: result does not match matrix dimensions");
  }
}

}  // namespace

double lower_bound_factor(double rho, std::size_t r, std::size_t m, std::size_t n) {
  if (r == 0) return 0.0;
  const double rd = static_cast<double>(r);
  return 1.0 / (2.0 * rho * rho * rd *
                std::sqrt(static_cast<double>(m - r + 1) * static_cast<double>(n - r + 1)));
}

double upper_bound_factor(double rho, std::size_t r, std::size_t m, std::size_t n) {
  if (r >= std::min(m, n)) return 0.0;
  return 2.0 * rho * rho * static_cast<double>(r + 1) *
         std::sqrt(static_cast<double>(m - r) * static_cast<double>(n - r));
}

BoundCertificate verify_betabound(const DenseMatrix& a, const RankRevealResult& result) {
  check_consistency(a, result);
  BoundCertificate cert;
  cert.rows = a.rows();
  cert.cols = a.cols();
  cert.rank = result.rank;
  cert.rho = result.rho_used;
  cert.beta = result.beta_used;
  cert.rho_beta = cert.rho * cert.beta;
  cert.rho_over_beta = cert.beta > 0.0 ? cert.rho / cert.beta
                                        : std::numeric_limits<double>::infinity();

  const IndexSet other_rows = result.row_set.complement(a.rows());
  const IndexSet other_cols = result.col_set.complement(a.cols());
  const DenseMatrix a22 = select(a, other_rows, other_cols);

  if (result.rank == 0) {
    cert.schur_norm_c = max_abs_norm(a22);
  } else {
    const DenseMatrix a11 = select(a, result.row_set, result.col_set);
    std::optional<PivotedLu> lu;
    try {
      lu.emplace(a11, SingularityCheck::kExactZero);
    } catch (const SingularMatrix&) {
      cert.failure = "A11 is singular";
      return cert;
    }
    const DenseMatrix x = lu->solve(select(a, result.row_set, other_cols));
    const DenseMatrix y = lu->right_solve(select(a, other_rows, result.col_set));
    const DenseMatrix a21 = select(a, other_rows, result.col_set);
    cert.schur_norm_c = max_abs_norm(subtract(a22, multiply(a21, x)));
    cert.inv_norm_c = max_abs_norm(lu->inverse());
    cert.block_row_norm_c = max_abs_norm(x);
    cert.block_col_norm_c = max_abs_norm(y);
  }

  if (!within(cert.schur_norm_c, cert.rho_beta)) {
    cert.failure = describe("||A/A11||_C > rho*beta", cert.schur_norm_c, cert.rho_beta);
  } else if (!within(cert.inv_norm_c, cert.rho_over_beta)) {
    cert.failure = describe("||A11^-1||_C > rho/beta", cert.inv_norm_c, cert.rho_over_beta);
  } else if (!within(cert.block_row_norm_c, cert.rho)) {
    cert.failure = describe("||A11^-1 A12||_C > rho", cert.block_row_norm_c, cert.rho);
  } else if (!within(cert.block_col_norm_c, cert.rho)) {
    cert.failure = describe("||A21 A11^-1||_C > rho", cert.block_col_norm_c, cert.rho);
  }
  cert.betabound_passed = cert.failure.empty();
  cert.passed = cert.betabound_passed;
  return cert;
}

BoundCertificate verify_theorem_bounds(const DenseMatrix& a, const RankRevealResult& result) {
  BoundCertificate cert = verify_betabound(a, result);
  if (a.empty()) {
    cert.theorem_checked = true;
    cert.theorem_passed = true;
    return cert;
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = result.rank;
  const SvdResult svd = singular_values(a);
  cert.noise_floor = static_cast<double>(std::max(m, n)) * kMachineEpsilon * svd.largest();
  cert.lower_bound_factor = lower_bound_factor(cert.rho, r, m, n);
  cert.upper_bound_factor = upper_bound_factor(cert.rho, r, m, n);
  cert.theorem_checked = true;

  std::string failure;
  if (r >= 1) {
    cert.sigma_min_a11 = singular_values(select(a, result.row_set, result.col_set)).smallest();
    cert.sigma_r = svd.sigma(r);
    if (!within(cert.sigma_min_a11, cert.sigma_r, cert.noise_floor)) {
      failure = describe("sigma_min(A11) > sigma_r(A)", cert.sigma_min_a11, cert.sigma_r);
    } else if (!within(cert.lower_bound_factor * cert.sigma_r, cert.sigma_min_a11,
                       cert.noise_floor)) {
      failure = describe("lower bound factor * sigma_r(A) > sigma_min(A11)",
                         cert.lower_bound_factor * cert.sigma_r, cert.sigma_min_a11);
    }
  }
  if (failure.empty() && r < std::min(m, n)) {
    const IndexSet other_rows = result.row_set.complement(m);
    const IndexSet other_cols = result.col_set.complement(n);
    DenseMatrix schur = select(a, other_rows, other_cols);
    if (r >= 1) {
      const PivotedLu lu(select(a, result.row_set, result.col_set), SingularityCheck::kExactZero);
      const DenseMatrix x = lu.solve(select(a, result.row_set, other_cols));
      schur = subtract(schur, multiply(select(a, other_rows, result.col_set), x));
    }
    cert.schur_norm_2 = spectral_norm(schur);
    cert.sigma_r_plus_1 = svd.sigma(r + 1);
    if (!within(cert.sigma_r_plus_1, cert.schur_norm_2, cert.noise_floor)) {
      failure = describe("sigma_{r+1}(A) > ||A/A11||_2", cert.sigma_r_plus_1, cert.schur_norm_2);
    } else if (!within(cert.schur_norm_2, cert.upper_bound_factor * cert.sigma_r_plus_1,
                       cert.noise_floor)) {
      failure = describe("||A/A11||_2 > upper bound factor * sigma_{r+1}(A)", cert.schur_norm_2,
                         cert.upper_bound_factor * cert.sigma_r_plus_1);
    }
  }
  cert.theorem_passed = failure.empty();
  if (cert.failure.empty()) cert.failure = failure;
  cert.passed = cert.betabound_passed && cert.theorem_passed;
  return cert;
}

std::string sigma_ratio_bucket(double ratio) {
  if (ratio > 1e-1) return "(1e-1,1e0]";
  if (ratio > 1e-2) return "(1e-2,1e-1]";
  if (ratio > 1e-3) return "(1e-3,1e-2]";
  return "<=1e-3";
}

std::string pivot_ratio_bucket(double ratio) {
  if (ratio < 1.05) return "[1.00,1.05)";
  if (ratio < 1.5) return "[1.05,1.50)";
  if (ratio < 4.0) return "[1.5,4.0)";
  if (ratio < 5.0) return "[4.0,5.0)";
  return ">=5.0";
}

SvdComparison compare_with_svd(const DenseMatrix& a, const RankRevealResult& result) {
  check_consistency(a, result);
  SvdComparison cmp;
  cmp.r = result.rank;
  if (a.empty()) {
    cmp.ratio_r = 1.0;
    cmp.ratio_r1 = 1.0;
    cmp.pivot_ratio_bucket = pivot_ratio_bucket(cmp.pivot_ratio);
    cmp.sigma_ratio_bucket = "n/a";
    return cmp;
  }
  const SvdResult svd = singular_values(a);
  const std::size_t d = std::min(a.rows(), a.cols());
  const std::size_t r = cmp.r;
  const std::size_t s = numerical_rank_svd(svd, a.rows(), a.cols());
  cmp.s = s;

  if (r == 0 && s == 0) {
    cmp.ratio_r = 1.0;
  } else if (r > 0 && s > 0) {
    cmp.ratio_r = svd.sigma(r) / svd.sigma(s);
  }
  if (r < d && s < d && svd.sigma(s + 1) > 0.0) {
    cmp.ratio_r1 = svd.sigma(r + 1) / svd.sigma(s + 1);
  } else if (r == 0 && s == 0) {
    cmp.ratio_r1 = 1.0;
  }

  if (r > 0) {
    cmp.sigma_min_a11 = singular_values(result.a11).smallest();
    cmp.sigma_r = svd.sigma(r);
    cmp.sigma_ratio = cmp.sigma_min_a11 / cmp.sigma_r;
    cmp.sigma_ratio_bucket = sigma_ratio_bucket(*cmp.sigma_ratio);
    cmp.pivot_ratio = static_cast<double>(result.pivot_count) / static_cast<double>(r);
  } else {
    cmp.sigma_ratio_bucket = "n/a";
    cmp.pivot_ratio =
        result.pivot_count == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  cmp.pivot_ratio_bucket = pivot_ratio_bucket(cmp.pivot_ratio);
  return cmp;
}

}  // namespace rrge
