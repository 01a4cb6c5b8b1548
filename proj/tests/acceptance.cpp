// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rrge/bounds.hpp"
#include "rrge/engine.hpp"
#include "rrge/generators.hpp"
#include "rrge/lu.hpp"
#include "rrge/matrix.hpp"
#include "rrge/svd.hpp"
#include "rrge/volume.hpp"

using namespace rrge;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  if (!detail.empty()) std::printf("    %s\n", detail.c_str());
  if (!ok) ++failures;
}

DenseMatrix schur_from_scratch(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  const IndexSet rows2 = rows.complement(a.rows());
  const IndexSet cols2 = cols.complement(a.cols());
  const PivotedLu lu(select(a, rows, cols), SingularityCheck::kExactZero);
  return subtract(select(a, rows2, cols2),
                  multiply(select(a, rows2, cols), lu.solve(select(a, rows, cols2))));
}

void criterion1() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t m : {10, 20, 30, 50}) {
    const DenseMatrix a = gen_peters(m);
    const double rho = 2.0;
    const double beta = double(m) * kMachineEpsilon * max_abs_norm(a);
    const RankRevealResult r = find_submatrix(a, rho, beta);
    const bool rank_ok = r.rank == m - 1;
    const bool block_ok = r.row_set == IndexSet::range(0, m - 1) &&
                          r.col_set == IndexSet::range(1, m);
    bool schur_ok = false;
    bool sigma_ok = false;
    if (rank_ok) {
      schur_ok = max_abs_norm(schur_from_scratch(a, r.row_set, r.col_set)) <= rho * beta;
      const double k = double(m - 1);
      const double lower = 1.0 / (2 * rho * rho * k * std::sqrt(2.0 * 2.0));
      sigma_ok = singular_values(r.a11).smallest() / singular_values(a).sigma(m - 1) >= lower;
    }
    ok = ok && rank_ok && block_ok && schur_ok && sigma_ok;
    detail << "m=" << m << ": r=" << r.rank << (rank_ok && block_ok && schur_ok && sigma_ok
                                                     ? " ok"
                                                     : " (expected " + std::to_string(m - 1) +
                                                           ", sigma_m=" +
                                                           std::to_string(singular_values(a).smallest()) + ")")
           << "; ";
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 2.0;
  detail << "time " << elapsed << " s";
  report(1, ok, "Peters matrices m in {10,20,30,50}: r = m-1, upper-right block, Schur and sigma bounds, < 2 s",
         detail.str());
}

void criterion2() {
  bool ok = true;
  std::ostringstream detail;
  const DenseMatrix ex2 = gen_example_local_not_normal(0.99);
  const IndexSet all = IndexSet::range(0, 4);
  const double v12 = volume(select(ex2, all, {0, 1}));
  const double v13 = volume(select(ex2, all, {0, 2}));
  ok = ok && std::abs(v12 - 2.2272) <= 5e-5 && std::abs(v13 - 2.4169) <= 5e-5;
  const double factor = std::abs(det_bruteforce(select(ex2, {2, 3}, {0, 2})) /
                                 det_bruteforce(select(ex2, {2, 3}, {0, 1})));
  ok = ok && std::abs(factor - 99.0) <= 1e-9 * 99.0;

  const DenseMatrix ex1 = gen_example_normal_not_local();
  const IndexSet l3 = IndexSet::range(0, 3);
  const IndexSet l2 = IndexSet::range(0, 2);
  const bool n1 = is_normal_max_volume(ex1, l3, l3, 1.0);
  const bool loc1 = is_local_max_volume(ex1, l3, l3, 1.0);
  const bool n2 = is_normal_max_volume(ex2, l2, l2, 1.0);
  const bool loc2 = is_local_max_volume(ex2, l2, l2, 1.0);
  ok = ok && n1 && !loc1 && !n2 && loc2;
  detail.precision(6);
  detail << "vol{1,2}=" << v12 << " vol{1,3}=" << v13 << " factor=" << factor
         << "; 7x4: normal=" << n1 << " local=" << loc1 << "; 4x3: normal=" << n2
         << " local=" << loc2;
  report(2, ok, "counterexample volumes, factor 99 and both predicate pairs at rho = 1",
         detail.str());
}

void criterion3() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::normal_distribution<double> normal;
  auto gaussian = [&](std::size_t r, std::size_t c) {
    DenseMatrix a(r, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) a(i, j) = normal(rng);
    return a;
  };
  auto vec = [&](std::size_t k) {
    std::vector<double> v(k);
    for (double& x : v) x = normal(rng);
    return v;
  };
  int bad[3] = {0, 0, 0};
  double worst = 0.0;
  auto check = [&](int lemma, double got, double expected) {
    const double err = std::abs(got - expected) / std::abs(expected);
    worst = std::max(worst, err);
    if (!(err <= 1e-9)) ++bad[lemma];
  };
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix a11 = gaussian(k, k);
    const auto b = vec(k);
    const std::size_t j = rng() % k;
    DenseMatrix repl = a11;
    for (std::size_t i = 0; i < k; ++i) repl(i, j) = b[i];
    check(0, col_replace_ratio(a11, j, b), std::abs(det_bruteforce(repl) / det_bruteforce(a11)));
  }
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix ahat = gaussian(k + 1, k + 1);
    const std::size_t i = rng() % (k + 1);
    const std::size_t j = rng() % (k + 1);
    const DenseMatrix b = select(ahat, IndexSet({i}).complement(k + 1), IndexSet({j}).complement(k + 1));
    check(1, remove_rowcol_ratio(ahat, i, j), std::abs(det_bruteforce(b) / det_bruteforce(ahat)));
  }
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix a11 = gaussian(k, k);
    const auto b = vec(k);
    const auto c = vec(k);
    const double alpha = normal(rng);
    const std::size_t i = rng() % k;
    const std::size_t j = rng() % k;
    DenseMatrix h(k + 1, k + 1);
    for (std::size_t q = 0; q < k; ++q) {
      for (std::size_t p = 0; p < k; ++p) h(p, q) = a11(p, q);
      h(k, q) = c[q];
      h(q, k) = b[q];
    }
    h(k, k) = alpha;
    for (std::size_t q = 0; q <= k; ++q) std::swap(h(i, q), h(k, q));
    for (std::size_t p = 0; p <= k; ++p) std::swap(h(p, j), h(p, k));
    const DenseMatrix lead = select(h, IndexSet::range(0, k), IndexSet::range(0, k));
    check(2, swap_rowcol_ratio(a11, b, c, alpha, i, j),
          std::abs(det_bruteforce(lead) / det_bruteforce(a11)));
  }
  const double elapsed = seconds_since(start);
  const bool ok = bad[0] == 0 && bad[1] == 0 && bad[2] == 0 && elapsed < 10.0;
  std::ostringstream detail;
  detail << "mismatches " << bad[0] << "/" << bad[1] << "/" << bad[2]
         << " of 1000 each, worst relative error " << worst << ", time " << elapsed << " s";
  report(3, ok, "volume ratio formulas match brute-force determinants (1000 each, k <= 6, 1e-9)",
         detail.str());
}

struct SuiteRun {
  std::string name;
  RankRevealResult result;
  BoundCertificate betabound;
  BoundCertificate theorem;
  SvdComparison cmp;
};

std::vector<SuiteRun> run_suite(const std::vector<NamedMatrix>& suite, double rho) {
  std::vector<SuiteRun> runs;
  runs.reserve(suite.size());
  for (const NamedMatrix& item : suite) {
    SuiteRun run;
    run.name = item.name;
    run.result = reveal_rank(item.matrix, rho);
    run.betabound = verify_betabound(item.matrix, run.result);
    run.theorem = verify_theorem_bounds(item.matrix, run.result);
    run.cmp = compare_with_svd(item.matrix, run.result);
    runs.push_back(std::move(run));
  }
  return runs;
}

void criterion4(const std::vector<SuiteRun>& runs, double elapsed) {
  int beta_ok = 0;
  int theorem_ok = 0;
  std::string first;
  for (const SuiteRun& r : runs) {
    beta_ok += r.betabound.passed;
    theorem_ok += r.theorem.passed;
    if (first.empty() && !r.theorem.passed) first = r.name + ": " + r.theorem.failure;
  }
  const int n = int(runs.size());
  std::ostringstream detail;
  detail << "betabound " << beta_ok << "/" << n << ", singular value bounds " << theorem_ok << "/"
         << n << ", time " << elapsed << " s";
  if (!first.empty()) detail << "; first failure " << first;
  report(4, beta_ok == n && theorem_ok == n && n == 200 && elapsed < 30.0,
         "certificates on 200 seeded random matrices", detail.str());
}

void criterion5(const std::vector<SuiteRun>& runs) {
  int agree = 0;
  bool ratios_ok = true;
  std::ostringstream dis;
  for (const SuiteRun& r : runs) {
    if (r.cmp.r == r.cmp.s) {
      ++agree;
      continue;
    }
    const auto in_band = [](const std::optional<double>& v) { return !v || (*v >= 0.05 && *v <= 20); };
    ratios_ok = ratios_ok && in_band(r.cmp.ratio_r) && in_band(r.cmp.ratio_r1);
    dis << r.name << " r=" << r.cmp.r << " s=" << r.cmp.s << "; ";
  }
  std::ostringstream detail;
  detail << "agreement " << agree << "/" << runs.size();
  if (!dis.str().empty()) detail << "; disagreements: " << dis.str();
  report(5, agree >= 195 && ratios_ok,
         "rank agreement with the SVD on >= 195/200, disagreement ratios in [0.05, 20]",
         detail.str());
}

void criterion6(const std::vector<SuiteRun>& at2, const std::vector<SuiteRun>& at11) {
  auto tally = [](const std::vector<SuiteRun>& runs, double& mean) {
    int low = 0;
    mean = 0.0;
    for (const SuiteRun& r : runs) {
      low += r.cmp.pivot_ratio < 1.05;
      mean += r.cmp.pivot_ratio;
    }
    mean /= double(runs.size());
    return low;
  };
  double mean2 = 0.0;
  double mean11 = 0.0;
  const int low2 = tally(at2, mean2);
  const int low11 = tally(at11, mean11);
  std::ostringstream detail;
  detail << "rho=2.0: " << low2 << "/" << at2.size() << " in [1.00,1.05), mean pivots/r "
         << mean2 << "; rho=1.1: " << low11 << "/" << at11.size() << ", mean " << mean11;
  report(6, low2 * 10 >= int(at2.size()) * 9 && low11 < low2 && mean11 > mean2,
         "pivots/r in [1.00,1.05) for >= 90% at rho = 2.0, shifting upward at rho = 1.1",
         detail.str());
}

void criterion7(const std::vector<SuiteRun>& runs) {
  int with_rank = 0;
  int good = 0;
  double worst = 1.0;
  for (const SuiteRun& r : runs) {
    if (r.result.rank == 0) continue;
    ++with_rank;
    const double ratio = *r.cmp.sigma_ratio;
    worst = std::min(worst, ratio);
    good += ratio > 1e-3;
  }
  std::ostringstream detail;
  detail << good << "/" << with_rank << " matrices with r >= 1 (" << runs.size() - with_rank
         << " zero-rank matrices have no A11), smallest ratio " << worst;
  report(7, good == with_rank, "sigma_min(A11)/sigma_r(A) > 1e-3 for every matrix", detail.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();

  const std::vector<NamedMatrix> suite = random_suite(200, 1);
  const auto start = Clock::now();
  const std::vector<SuiteRun> at2 = run_suite(suite, 2.0);
  const double elapsed = seconds_since(start);
  const std::vector<SuiteRun> at11 = run_suite(suite, 1.1);
  criterion4(at2, elapsed);
  criterion5(at2);
  criterion6(at2, at11);
  criterion7(at2);

  std::printf(
      "criterion 8: SKIP  external 327-matrix database counts and the LU cost ratio are not "
      "reproducible; pivot and flop counters are reported instead\n");
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
