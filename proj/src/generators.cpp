#include "rrge/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "rrge/error.hpp"

namespace rrge {

namespace {

DenseMatrix gaussian(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  DenseMatrix g(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (double& v : g.column(j)) v = normal(rng);
  return g;
}

/// Q factor of a Gaussian matrix by modified Gram-Schmidt with
/// reorthogonalization. R has a positive diagonal, so Q is Haar distributed.
DenseMatrix orthogonal(std::size_t n, std::mt19937_64& rng) {
  DenseMatrix q = gaussian(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    auto qj = q.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < j; ++l) {
        auto ql = q.column(l);
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += ql[i] * qj[i];
        for (std::size_t i = 0; i < n; ++i) qj[i] -= proj * ql[i];
      }
      double norm = 0.0;
      for (double v : qj) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : qj) v /= norm;
    }
  }
  return q;
}

}  // namespace

DenseMatrix gen_peters(std::size_t m, PetersPattern pattern) {
  if (m == 0) throw InvalidArgument("gen_peters: m must be >= 1");
  DenseMatrix a = DenseMatrix::identity(m);
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const bool bordered = i == 0 || j == m - 1;
      if (pattern == PetersPattern::kFull || bordered) a(i, j) = -1.0;
    }
  }
  return a;
}

DenseMatrix gen_example_normal_not_local() {
  return DenseMatrix::from_rows({
      {1, 0, 0, 1},
      {0, 1, 0, 1},
      {0, 0, 1, 1},
      {1, 1, 1, 0},
      {1, 0, 0, 0},
      {0, 1, 0, 0},
      {0, 0, 1, 0},
  });
}

DenseMatrix gen_example_local_not_normal(double d) {
  if (!(d > 0.0 && d < 1.0)) throw InvalidArgument("gen_example_local_not_normal: d not in (0,1)");
  return DenseMatrix::from_rows({
      {1, 0, 0},
      {0, 1, 0},
      {d, -1, -d},
      {-1, d, -d},
  });
}

DenseMatrix gen_random_orthogonal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return orthogonal(n, rng);
}

DenseMatrix gen_gaussian(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gaussian(m, n, rng);
}

DenseMatrix gen_random_rank_deficient(std::size_t m, std::size_t n, std::size_t r_true,
                                      double gap, std::uint64_t seed) {
  const std::size_t d = std::min(m, n);
  if (m == 0 || n == 0 || r_true < 1 || r_true > d) {
    throw InvalidArgument("gen_random_rank_deficient: need 1 <= r_true <= min(m, n)");
  }
  if (!(gap > 0.0 && gap < 1.0)) throw InvalidArgument("gen_random_rank_deficient: gap not in (0,1)");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(-2.0, 0.0);
  std::vector<double> sigma(d, 0.0);
  for (std::size_t i = 0; i < r_true; ++i) sigma[i] = std::pow(10.0, exponent(rng));
  std::sort(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(r_true), std::greater<>());
  for (std::size_t i = r_true; i < d; ++i) sigma[i] = sigma[i - 1] * gap;

  const DenseMatrix u = orthogonal(m, rng);
  const DenseMatrix v = orthogonal(n, rng);
  // A = sum_l sigma_l u_l v_l^T over the first d columns.
  DenseMatrix a(m, n);
  for (std::size_t l = 0; l < d; ++l) {
    if (sigma[l] == 0.0) continue;
    auto ul = u.column(l);
    auto vl = v.column(l);
    for (std::size_t j = 0; j < n; ++j) {
      const double s = sigma[l] * vl[j];
      auto aj = a.column(j);
      for (std::size_t i = 0; i < m; ++i) aj[i] += ul[i] * s;
    }
  }
  return a;
}

std::vector<NamedMatrix> random_suite(std::size_t count, std::uint64_t seed,
                                      std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::vector<NamedMatrix> suite;
  suite.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, std::min(m, n))(rng);
    const double gap = t % 2 == 0 ? 1e-8 : 1e-12;
    const std::uint64_t matrix_seed = rng();
    std::string name = "random:" + std::to_string(m) + "," + std::to_string(n) + "," +
                       std::to_string(r) + "," + (t % 2 == 0 ? "1e-8" : "1e-12") + "," +
                       std::to_string(matrix_seed);
    DenseMatrix a = r == 0 ? DenseMatrix(m, n)
                           : gen_random_rank_deficient(m, n, r, gap, matrix_seed);
    suite.push_back({std::move(name), std::move(a)});
  }
  return suite;
}

}  // namespace rrge
