#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rrge/bounds.hpp"
#include "rrge/engine.hpp"
#include "rrge/error.hpp"
#include "rrge/generators.hpp"
#include "rrge/lu.hpp"
#include "rrge/svd.hpp"
#include "rrge/verify.hpp"

using namespace rrge;

TEST_CASE("bound factors") {
  // 1 / (2 rho^2 r sqrt((m-r+1)(n-r+1))) and 2 rho^2 (r+1) sqrt((m-r)(n-r)).
  for (double rho : {1.0, 1.1, 2.0}) {
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t n = m; n <= 7; ++n) {
        for (std::size_t r = 1; r <= m; ++r) {
          const double lo = 1.0 / (2.0 * rho * rho * double(r) *
                                   std::sqrt(double(m - r + 1) * double(n - r + 1)));
          CHECK(lower_bound_factor(rho, r, m, n) == doctest::Approx(lo).epsilon(1e-15));
        }
        for (std::size_t r = 0; r < m; ++r) {
          const double hi =
              2.0 * rho * rho * double(r + 1) * std::sqrt(double(m - r) * double(n - r));
          CHECK(upper_bound_factor(rho, r, m, n) == doctest::Approx(hi).epsilon(1e-15));
        }
      }
    }
  }
  CHECK(lower_bound_factor(2.0, 10, 20, 20) == doctest::Approx(1.0 / (80 * 11.0)));
  CHECK(upper_bound_factor(2.0, 3, 5, 5) == doctest::Approx(64.0));
}

TEST_CASE("certificates for a zero matrix") {
  const DenseMatrix z(3, 4);
  const RankRevealResult r = reveal_rank(z, 2.0);
  const BoundCertificate c = verify_theorem_bounds(z, r);
  CHECK(c.schur_norm_c == 0.0);
  CHECK(c.betabound_passed);
  CHECK(c.passed);
  const SvdComparison cmp = compare_with_svd(z, r);
  CHECK(cmp.r == 0);
  CHECK(cmp.s == 0);
  REQUIRE(cmp.ratio_r.has_value());
  CHECK(*cmp.ratio_r == 1.0);
  REQUIRE(cmp.ratio_r1.has_value());
  CHECK(*cmp.ratio_r1 == 1.0);
  CHECK(cmp.pivot_ratio == 1.0);
  CHECK(cmp.sigma_ratio_bucket == "n/a");

  const RankRevealResult with_beta = find_submatrix(z, 2.0, 1e-3);
  CHECK(verify_betabound(z, with_beta).passed);
}

TEST_CASE("certificates for the identity") {
  const DenseMatrix id = DenseMatrix::identity(5);
  const RankRevealResult r = reveal_rank(id, 2.0);
  const BoundCertificate c = verify_theorem_bounds(id, r);
  CHECK(c.passed);
  CHECK(c.theorem_checked);
  CHECK(c.sigma_min_a11 == doctest::Approx(1.0));
  CHECK(c.sigma_r == doctest::Approx(1.0));
  CHECK(c.sigma_r_plus_1 == 0.0);
  const SvdComparison cmp = compare_with_svd(id, r);
  CHECK(cmp.r == 5);
  CHECK(cmp.s == 5);
  CHECK(*cmp.ratio_r == 1.0);
  CHECK_FALSE(cmp.ratio_r1.has_value());
  CHECK(cmp.pivot_ratio_bucket == "[1.00,1.05)");
  CHECK(cmp.sigma_ratio_bucket == "(1e-1,1e0]");
}

TEST_CASE("certificates for Peters matrices") {
  for (std::size_t m : {20, 30, 50}) {
    INFO("m = " << m);
    const DenseMatrix a = gen_peters(m);
    const RankRevealResult r = reveal_rank(a, 2.0);
    const BoundCertificate c = verify_theorem_bounds(a, r);
    CHECK(c.betabound_passed);
    CHECK(c.passed);
    CHECK(c.schur_norm_c <= c.rho_beta);
    const double ratio = c.sigma_min_a11 / c.sigma_r;
    CHECK(ratio >= c.lower_bound_factor);
    CHECK(ratio <= 1.0 + 1e-8);
    const SvdComparison cmp = compare_with_svd(a, r);
    CHECK(cmp.r == cmp.s);
    CHECK(*cmp.ratio_r == 1.0);
    CHECK(cmp.sigma_ratio_bucket == "(1e-1,1e0]");
  }
  const BoundCertificate c50 = verify_theorem_bounds(gen_peters(50), reveal_rank(gen_peters(50), 2.0));
  CHECK(c50.rank == 49);
  CHECK(c50.schur_norm_c < std::ldexp(1.0, -45));
}

TEST_CASE("betabound flags a wrong selection") {
  const DenseMatrix a = DenseMatrix::from_rows({{1, 0}, {0, 1}});
  RankRevealResult fake = reveal_rank(a, 2.0);
  fake.rank = 1;
  fake.row_set = {0};
  fake.col_set = {0};
  fake.a11 = select(a, fake.row_set, fake.col_set);
  fake.schur = DenseMatrix::from_rows({{1}});
  const BoundCertificate c = verify_betabound(a, fake);
  CHECK_FALSE(c.betabound_passed);
  CHECK_FALSE(c.passed);
  CHECK_FALSE(c.failure.empty());

  RankRevealResult wrong_size = reveal_rank(a, 2.0);
  CHECK_THROWS_AS(verify_betabound(DenseMatrix::identity(3), wrong_size), InvalidArgument);
}

TEST_CASE("random 30 x 50 rank 15 instances pass") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const DenseMatrix a = gen_random_rank_deficient(30, 50, 15, 1e-12, seed);
    const RankRevealResult r = reveal_rank(a, 2.0);
    const BoundCertificate c = verify_theorem_bounds(a, r);
    INFO(c.failure);
    CHECK(c.passed);
  }
}

TEST_CASE("block norms recomputed with explicit inverses stay within rho") {
  for (const NamedMatrix& item : random_suite(200, 1)) {
    INFO(item.name);
    const DenseMatrix& a = item.matrix;
    const RankRevealResult r = reveal_rank(a, 2.0);
    if (r.rank == 0) continue;
    const double rho = r.rho_used;
    const BoundCertificate c = verify_betabound(a, r);
    CHECK(c.passed);
    CHECK(c.block_row_norm_c <= rho * (1 + 1e-8));
    CHECK(c.block_col_norm_c <= rho * (1 + 1e-8));
    CHECK(c.schur_norm_c <= rho * r.beta_used * (1 + 1e-8));
    const DenseMatrix inv = PivotedLu(r.a11, SingularityCheck::kExactZero).inverse();
    CHECK(max_abs_norm(inv) <= rho / r.beta_used * (1 + 1e-8));
  }
}

TEST_CASE("bounds battery and Figure 1 ratio monotonicity") {
  const BatteryResult battery = run_bounds_battery(200, 1);
  INFO(battery.first_failure);
  CHECK(battery.passed());

  for (const NamedMatrix& item : random_suite(200, 3)) {
    const RankRevealResult r = reveal_rank(item.matrix, 2.0);
    const SvdComparison cmp = compare_with_svd(item.matrix, r);
    if (cmp.r <= cmp.s && cmp.ratio_r) CHECK(*cmp.ratio_r >= 1.0);
    if (cmp.r >= cmp.s && cmp.ratio_r1) CHECK(*cmp.ratio_r1 <= 1.0);
  }
}

TEST_CASE("bucket labels") {
  CHECK(sigma_ratio_bucket(1.0) == "(1e-1,1e0]");
  CHECK(sigma_ratio_bucket(0.1) == "(1e-2,1e-1]");
  CHECK(sigma_ratio_bucket(0.05) == "(1e-2,1e-1]");
  CHECK(sigma_ratio_bucket(0.005) == "(1e-3,1e-2]");
  CHECK(sigma_ratio_bucket(1e-3) == "<=1e-3");
  CHECK(pivot_ratio_bucket(1.0) == "[1.00,1.05)");
  CHECK(pivot_ratio_bucket(1.05) == "[1.05,1.50)");
  CHECK(pivot_ratio_bucket(1.5) == "[1.5,4.0)");
  CHECK(pivot_ratio_bucket(4.0) == "[4.0,5.0)");
  CHECK(pivot_ratio_bucket(7.0) == ">=5.0");
}
