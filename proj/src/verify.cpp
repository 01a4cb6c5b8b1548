#include "rrge/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "rrge/bounds.hpp"
#include "rrge/engine.hpp"
#include "rrge/generators.hpp"
#include "rrge/svd.hpp"
#include "rrge/volume.hpp"

namespace rrge {

namespace {

constexpr double kLemmaTolerance = 1e-9;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& context) {
    ++result_.checks;
    if (!ok) {
      if (result_.failures == 0) result_.first_failure = context;
      ++result_.failures;
    }
  }

  void compare(double got, double expected, double rel_tol, const std::string& context) {
    const double err = std::abs(got - expected) / std::max(std::abs(expected), 1e-300);
    result_.worst_relative_error = std::max(result_.worst_relative_error, err);
    std::ostringstream os;
    os.precision(17);
    os << context << ": got " << got << ", expected " << expected << " (relative error " << err
       << ")";
    check(err <= rel_tol, os.str());
  }

  BatteryResult take() { return std::move(result_); }

 private:
  BatteryResult result_;
};

DenseMatrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  return gen_gaussian(m, n, rng());
}

std::vector<double> random_vector(std::size_t k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(k);
  for (double& x : v) x = normal(rng);
  return v;
}

DenseMatrix bordered(const DenseMatrix& a11, const std::vector<double>& b,
                     const std::vector<double>& c, double alpha) {
  const std::size_t k = a11.rows();
  DenseMatrix h(k + 1, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) h(i, j) = a11(i, j);
    h(k, j) = c[j];
    h(j, k) = b[j];
  }
  h(k, k) = alpha;
  return h;
}

std::string describe_instance(const char* lemma, std::size_t trial, std::size_t k,
                              std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << lemma << " trial " << trial << " (k=" << k << ", i=" << i << ", j=" << j << ")";
  return os.str();
}

}  // namespace

BatteryResult run_lemma_battery(std::size_t trials, std::uint64_t seed) {
  Recorder rec("lemmas");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix a11 = random_matrix(k, k, rng);
    const auto b = random_vector(k, rng);
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    DenseMatrix replaced = a11;
    for (std::size_t i = 0; i < k; ++i) replaced(i, j) = b[i];
    const double expected = std::abs(det_bruteforce(replaced) / det_bruteforce(a11));
    rec.compare(col_replace_ratio(a11, j, b), expected, kLemmaTolerance,
                describe_instance("column replacement", t, k, 0, j));
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix ahat = random_matrix(k + 1, k + 1, rng);
    std::uniform_int_distribution<std::size_t> pick(0, k);
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    std::vector<std::size_t> keep_rows;
    std::vector<std::size_t> keep_cols;
    for (std::size_t l = 0; l <= k; ++l) {
      if (l != i) keep_rows.push_back(l);
      if (l != j) keep_cols.push_back(l);
    }
    const DenseMatrix b = select(ahat, IndexSet(keep_rows), IndexSet(keep_cols));
    const double expected = std::abs(det_bruteforce(b) / det_bruteforce(ahat));
    rec.compare(remove_rowcol_ratio(ahat, i, j), expected, kLemmaTolerance,
                describe_instance("row/column removal", t, k + 1, i, j));
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = dim(rng);
    const DenseMatrix a11 = random_matrix(k, k, rng);
    const auto b = random_vector(k, rng);
    const auto c = random_vector(k, rng);
    const double alpha = std::normal_distribution<double>()(rng);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    // Interchange row k with row i and column k with column j, keep the
    // leading k x k block.
    DenseMatrix h = bordered(a11, b, c, alpha);
    for (std::size_t col = 0; col <= k; ++col) std::swap(h(i, col), h(k, col));
    for (std::size_t row = 0; row <= k; ++row) std::swap(h(row, j), h(row, k));
    const DenseMatrix swapped = select(h, IndexSet::range(0, k), IndexSet::range(0, k));
    const double expected = std::abs(det_bruteforce(swapped) / det_bruteforce(a11));
    rec.compare(swap_rowcol_ratio(a11, b, c, alpha, i, j), expected, kLemmaTolerance,
                describe_instance("row and column interchange", t, k, i, j));
  }
  return rec.take();
}

BatteryResult run_bounds_battery(std::size_t trials, std::uint64_t seed, double rho) {
  Recorder rec("bounds");
  for (const NamedMatrix& item : random_suite(trials, seed)) {
    const RankRevealResult result = reveal_rank(item.matrix, rho);
    const BoundCertificate cert = verify_theorem_bounds(item.matrix, result);
    rec.check(cert.passed, item.name + " (rank " + std::to_string(result.rank) +
                               "): " + cert.failure);
  }
  return rec.take();
}

BatteryResult run_examples_check() {
  Recorder rec("examples");
  const double d = 0.99;
  const DenseMatrix ex2 = gen_example_local_not_normal(d);
  const IndexSet all_rows = IndexSet::range(0, 4);
  const double vol12 = volume(select(ex2, all_rows, {0, 1}));
  const double vol13 = volume(select(ex2, all_rows, {0, 2}));
  rec.check(std::abs(vol12 - 2.2272) <= 5e-5,
            "volume of columns {1,2} = " + std::to_string(vol12) + ", expected 2.2272");
  rec.check(std::abs(vol13 - 2.4169) <= 5e-5,
            "volume of columns {1,3} = " + std::to_string(vol13) + ", expected 2.4169");

  const DenseMatrix lower_left = select(ex2, {2, 3}, {0, 1});
  const DenseMatrix exchanged = select(ex2, {2, 3}, {0, 2});
  rec.compare(std::abs(det_bruteforce(exchanged) / det_bruteforce(lower_left)), 99.0, 1e-9,
              "lower-left 2x2 volume factor after exchanging columns 2 and 3");

  const DenseMatrix ex1 = gen_example_normal_not_local();
  const IndexSet lead3 = IndexSet::range(0, 3);
  const IndexSet lead2 = IndexSet::range(0, 2);
  rec.check(is_normal_max_volume(ex1, lead3, lead3, 1.0),
            "7x4 example: leading 3x3 block should have normal maximum volume");
  rec.check(!is_local_max_volume(ex1, lead3, lead3, 1.0),
            "7x4 example: leading 3x3 block should not have local maximum volume");
  rec.check(is_local_max_volume(ex2, lead2, lead2, 1.0),
            "4x3 example: leading 2x2 block should have local maximum volume");
  rec.check(!is_normal_max_volume(ex2, lead2, lead2, 1.0),
            "4x3 example: leading 2x2 block should not have normal maximum volume");

  // Every three columns of the 7x4 example share the spectrum (sqrt5, sqrt2, sqrt2).
  for (std::size_t drop = 0; drop < 4; ++drop) {
    const SvdResult svd =
        singular_values(select_cols(ex1, IndexSet({drop}).complement(4)));
    const double expected[3] = {std::sqrt(5.0), std::sqrt(2.0), std::sqrt(2.0)};
    for (std::size_t l = 0; l < 3; ++l) {
      rec.compare(svd.singular_values[l], expected[l], 1e-12,
                  "7x4 example, columns without " + std::to_string(drop + 1) + ", sigma_" +
                      std::to_string(l + 1));
    }
  }
  return rec.take();
}

}  // namespace rrge
