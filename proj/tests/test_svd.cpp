#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "rrge/error.hpp"
#include "rrge/generators.hpp"
#include "rrge/svd.hpp"

using namespace rrge;

namespace {

IndexSet random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return IndexSet(all);
}

}  // namespace

TEST_CASE("singular values of simple matrices") {
  const SvdResult id = singular_values(DenseMatrix::identity(4));
  CHECK(id.singular_values == std::vector<double>{1, 1, 1, 1});

  const std::vector<double> d{1, 3, 2};
  const SvdResult diag = singular_values(DenseMatrix::diagonal(d));
  REQUIRE(diag.singular_values.size() == 3);
  CHECK(diag.singular_values[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(diag.singular_values[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(diag.singular_values[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(diag.sigma(4) == 0.0);
  CHECK(diag.sigma(0) == 0.0);

  CHECK_THROWS_AS(singular_values(DenseMatrix(0, 3)), InvalidArgument);
  CHECK_THROWS_AS(volume(DenseMatrix(2, 0)), InvalidArgument);
}

TEST_CASE("any three columns of the 7x4 example") {
  const DenseMatrix a = gen_example_normal_not_local();
  for (std::size_t drop = 0; drop < 4; ++drop) {
    const SvdResult s = singular_values(select_cols(a, IndexSet({drop}).complement(4)));
    CHECK(s.singular_values[0] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
    CHECK(s.singular_values[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK(s.singular_values[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  }
  CHECK(volume(select_cols(a, {0, 1, 2})) == doctest::Approx(std::sqrt(20.0)).epsilon(1e-13));
}

TEST_CASE("volumes of the 4x3 example") {
  const DenseMatrix a = gen_example_local_not_normal(0.99);
  const IndexSet rows = IndexSet::range(0, 4);
  CHECK(std::abs(volume(select(a, rows, {0, 1})) - 2.2272) <= 5e-5);
  CHECK(std::abs(volume(select(a, rows, {0, 2})) - 2.4169) <= 5e-5);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(volume(DenseMatrix::identity(k)) == 1.0);
}

TEST_CASE("numerical_rank_svd") {
  CHECK(numerical_rank_svd(DenseMatrix(4, 3)) == 0);
  CHECK(numerical_rank_svd(gen_random_orthogonal(10, 4)) == 10);
  // sigma_30 of the Peters matrix is about 2.8e-9, well above 30 eps sigma_1,
  // so the SVD rank is 30 (the m - 1 drop needs m around 50).
  CHECK(numerical_rank_svd(gen_peters(30)) == 30);
  CHECK(numerical_rank_svd(gen_peters(50)) == 49);
  const DenseMatrix rank_one = DenseMatrix::from_rows({{1, 2}, {2, 4}, {3, 6}});
  CHECK(numerical_rank_svd(rank_one) == 1);
}

TEST_CASE("Peters sigma_m decays like 2^-m") {
  for (std::size_t m = 10; m <= 40; ++m) {
    const double sm = singular_values(gen_peters(m)).smallest();
    CHECK(sm * std::ldexp(1.0, int(m)) <= 4.0);
  }
}

TEST_CASE("interlacing: sigma_min(B) <= sigma_k(A)") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    const DenseMatrix a = gen_gaussian(m, n, rng());
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(m, n))(rng);
    const DenseMatrix b = select(a, random_subset(m, k, rng), random_subset(n, k, rng));
    const double smin = singular_values(b).smallest();
    CHECK(smin <= singular_values(a).sigma(k) * (1 + 1e-12));
  }
}

TEST_CASE("volume of a square matrix is |det|") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix a = gen_gaussian(k, k, rng());
    const double det = std::abs(det_bruteforce(a));
    CHECK(std::abs(volume(a) - det) <= 1e-9 * det);
  }
}

TEST_CASE("transpose invariance and Frobenius identity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 15);
  for (int t = 0; t < 50; ++t) {
    const DenseMatrix a = gen_gaussian(dim(rng), dim(rng), rng());
    const SvdResult s = singular_values(a);
    const SvdResult st = singular_values(transpose(a));
    REQUIRE(s.singular_values.size() == st.singular_values.size());
    for (std::size_t i = 0; i < s.singular_values.size(); ++i) {
      CHECK(std::abs(s.singular_values[i] - st.singular_values[i]) <= 1e-12 * s.largest());
      if (i > 0) CHECK(s.singular_values[i] <= s.singular_values[i - 1]);
    }
    double sum = 0;
    for (double x : s.singular_values) sum += x * x;
    const double f = frobenius_norm(a);
    CHECK(sum == doctest::Approx(f * f).epsilon(1e-12));
  }
}

TEST_CASE("prescribed spectra are recovered") {
  const std::vector<double> want{1.0, 0.5, 1e-3, 1e-9};
  const DenseMatrix u = gen_random_orthogonal(6, 1);
  const DenseMatrix v = gen_random_orthogonal(4, 2);
  DenseMatrix s(6, 4);
  for (std::size_t i = 0; i < 4; ++i) s(i, i) = want[i];
  const DenseMatrix a = multiply(multiply(u, s), transpose(v));
  const SvdResult got = singular_values(a);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(got.singular_values[i] - want[i]) <= 1e-14);
}
