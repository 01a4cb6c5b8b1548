#include "rrge/svd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rrge/error.hpp"

namespace rrge {

namespace {

constexpr double kOrthogonalityTolerance = 1e-15;
constexpr int kMaxSweeps = 80;

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(std::span<const double> x) {
  double scale = 0.0;
  double ssq = 1.0;
  for (double v : x) {
    if (v == 0.0) continue;
    const double a = std::abs(v);
    if (scale < a) {
      ssq = 1.0 + ssq * (scale / a) * (scale / a);
      scale = a;
    } else {
      ssq += (a / scale) * (a / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

}  // namespace

SvdResult singular_values(const DenseMatrix& a) {
  if (a.empty()) throw InvalidArgument("singular_values: empty matrix");

  // Work on the orientation with at least as many rows as columns so the
  // column count equals min(m, n).
  DenseMatrix w = a.rows() >= a.cols() ? a : transpose(a);
  const std::size_t n = w.cols();

  // Column norms are tracked explicitly and refreshed after each rotation;
  // pre-scaling by the max entry keeps the squared norms away from
  // overflow/underflow.
  const double scale = max_abs_norm(w);
  if (scale == 0.0) return SvdResult{std::vector<double>(n, 0.0)};
  for (std::size_t j = 0; j < n; ++j)
    for (double& v : w.column(j)) v /= scale;

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = norm2(w.column(j));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (norms[p] == 0.0 || norms[q] == 0.0) continue;
        auto cp = w.column(p);
        auto cq = w.column(q);
        const double gamma = dot(cp, cq);
        if (std::abs(gamma) <= kOrthogonalityTolerance * norms[p] * norms[q]) continue;
        rotated = true;
        const double alpha = norms[p] * norms[p];
        const double beta = norms[q] * norms[q];
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t i = 0; i < w.rows(); ++i) {
          const double xp = cp[i];
          const double xq = cq[i];
          cp[i] = c * xp - s * xq;
          cq[i] = s * xp + c * xq;
        }
        norms[p] = norm2(cp);
        norms[q] = norm2(cq);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = norms[j] * scale;
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return SvdResult{std::move(sv)};
}

double volume(const DenseMatrix& a) {
  const SvdResult svd = singular_values(a);
  double v = 1.0;
  for (double s : svd.singular_values) v *= s;
  return v;
}

double spectral_norm(const DenseMatrix& a) {
  if (a.empty()) return 0.0;
  return singular_values(a).largest();
}

std::size_t numerical_rank_svd(const SvdResult& svd, std::size_t rows, std::size_t cols) {
  const double sigma1 = svd.largest();
  if (sigma1 == 0.0) return 0;
  const double tol = static_cast<double>(std::max(rows, cols)) * kMachineEpsilon * sigma1;
  std::size_t s = 0;
  for (std::size_t k = 0; k < svd.singular_values.size(); ++k)
    if (svd.singular_values[k] >= tol) s = k + 1;
  return s;
}

std::size_t numerical_rank_svd(const DenseMatrix& a) {
  return numerical_rank_svd(singular_values(a), a.rows(), a.cols());
}

}  // namespace rrge
