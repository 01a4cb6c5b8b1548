#include "rrge/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "rrge/bounds.hpp"
#include "rrge/engine.hpp"
#include "rrge/error.hpp"
#include "rrge/generators.hpp"
#include "rrge/report.hpp"
#include "rrge/sources.hpp"
#include "rrge/svd.hpp"
#include "rrge/verify.hpp"
#include "rrge/volume.hpp"

namespace rrge {

namespace {

constexpr const char* kSourceHelp =
    "Matrix sources:\n"
    "  peters:M               M x M Peters matrix (unit diagonal, -1 above)\n"
    "  peters-bordered:M      Peters pattern with only row 1 and column M filled above\n"
    "  example1               7 x 4 matrix, leading 3x3 block normal but not local max volume\n"
    "  example2:D             4 x 3 matrix (0 < D < 1), leading 2x2 block local but not normal\n"
    "  random:M,N,R,GAP,SEED  random M x N with R leading singular values and a GAP tail\n"
    "  zero:M,N               M x N zero matrix\n"
    "  <path>                 Matrix Market file (array or coordinate, real/integer)\n";

constexpr std::size_t kPredicateLimit = 16;

struct CommonOptions {
  double rho = 2.0;
  std::optional<double> beta;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--rho", opts.rho, "Pivot growth bound, >= 1")
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
      ->capture_default_str();
  cmd->add_option("--beta", opts.beta, "Scaling of the identity block (default max(m,n)*eps*||A||_C)")
      ->check(CLI::PositiveNumber);
}

std::string one_based(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

std::optional<std::size_t> default_block(const std::string& source) {
  if (source == "example1") return 3;
  if (source.rfind("example2:", 0) == 0) return 2;
  return std::nullopt;
}

void report_predicates(std::ostream& out, const DenseMatrix& a, const IndexSet& rows,
                       const IndexSet& cols, double rho, bool local, bool normal,
                       const std::string& label) {
  if (local) {
    out << "local max volume (" << label << ", rho=" << format_double(rho) << "): "
        << (is_local_max_volume(a, rows, cols, rho) ? "yes" : "no") << '\n';
  }
  if (normal) {
    out << "normal max volume (" << label << ", rho=" << format_double(rho) << "): ";
    if (a.rows() > kPredicateLimit || a.cols() > kPredicateLimit) {
      out << "skipped (matrix larger than " << kPredicateLimit << " x " << kPredicateLimit
          << ")\n";
    } else {
      out << (is_normal_max_volume(a, rows, cols, rho) ? "yes" : "no") << '\n';
    }
  }
}

struct RankArgs {
  CommonOptions common;
  std::string source;
  std::string csv;
  bool check_local = false;
  bool check_normal = false;
  bool timing = false;
  std::optional<std::size_t> block;
};

int cmd_rank(const RankArgs& args, std::ostream& out) {
  const DenseMatrix a = load_matrix_source(args.source);
  const auto start = std::chrono::steady_clock::now();
  const RankRevealResult result = reveal_rank(a, args.common.rho, args.common.beta);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const BoundCertificate cert = verify_theorem_bounds(a, result);
  const SvdComparison cmp = compare_with_svd(a, result);

  out << "source: " << args.source << " (" << a.rows() << " x " << a.cols() << ")\n";
  out << "rank: " << result.rank << '\n';
  out << "|row_set|: " << result.row_set.size() << '\n';
  out << "rows: " << one_based(result.row_set) << '\n';
  out << "cols: " << one_based(result.col_set) << '\n';
  out << "pivots: " << result.pivot_count << '\n';
  out << "flops: " << result.flops << '\n';
  out << "rho: " << format_double(result.rho_used) << '\n';
  out << "beta: " << format_double(result.beta_used) << '\n';
  out << "svd rank: " << cmp.s << '\n';
  out << "schur norm: " << format_double(cert.schur_norm_c) << '\n';
  out << "betabound: " << (cert.betabound_passed ? "pass" : "FAIL") << '\n';
  out << "singular value bounds: " << (cert.theorem_passed ? "pass" : "FAIL") << '\n';
  if (!cert.passed) out << "certificate failure: " << cert.failure << '\n';

  if (args.check_local || args.check_normal) {
    const std::optional<std::size_t> block = args.block ? args.block : default_block(args.source);
    if (block) {
      if (*block == 0 || *block > std::min(a.rows(), a.cols())) {
        throw InvalidArgument("--block " + std::to_string(*block) + " out of range");
      }
      const IndexSet lead = IndexSet::range(0, *block);
      report_predicates(out, a, lead, lead, args.common.rho, args.check_local, args.check_normal,
                        "leading " + std::to_string(*block) + "x" + std::to_string(*block) +
                            " block");
    }
    if (result.rank > 0) {
      report_predicates(out, a, result.row_set, result.col_set, args.common.rho,
                        args.check_local, args.check_normal, "selected block");
    }
  }

  if (!args.csv.empty()) {
    append_csv_row(make_report_row(args.source, a, result, cert, cmp,
                                   args.timing ? std::optional<double>(elapsed) : std::nullopt),
                   args.csv);
  }
  return kExitOk;
}

struct CompareArgs {
  CommonOptions common;
  std::vector<std::string> sources;
  std::string csv;
  std::size_t jobs = 1;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool timing = false;
};

ReportRow compare_one(const std::string& name, const DenseMatrix* given, const CompareArgs& args) {
  ReportRow row;
  row.name = name;
  row.rho = args.common.rho;
  try {
    const DenseMatrix a = given ? *given : load_matrix_source(name);
    row.m = a.rows();
    row.n = a.cols();
    const auto start = std::chrono::steady_clock::now();
    const RankRevealResult result = reveal_rank(a, args.common.rho, args.common.beta);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const BoundCertificate cert = verify_theorem_bounds(a, result);
    const SvdComparison cmp = compare_with_svd(a, result);
    row = make_report_row(name, a, result, cert, cmp,
                          args.timing ? std::optional<double>(elapsed) : std::nullopt);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

void print_table(std::ostream& out, const std::string& title,
                 const std::vector<std::string>& buckets, const std::map<std::string, int>& counts) {
  out << title << '\n';
  for (const std::string& b : buckets) {
    const auto it = counts.find(b);
    out << "  " << b;
    for (std::size_t pad = b.size(); pad < 14; ++pad) out << ' ';
    out << (it == counts.end() ? 0 : it->second) << '\n';
  }
}

void print_summary(std::ostream& out, const std::vector<ReportRow>& rows, double rho) {
  std::map<std::string, int> pivot_counts;
  std::map<std::string, int> sigma_counts;
  int agree = 0;
  int errors = 0;
  for (const ReportRow& r : rows) {
    if (r.error) {
      ++errors;
      continue;
    }
    ++pivot_counts[pivot_ratio_bucket(r.pivot_ratio)];
    ++sigma_counts[r.sigma_r_ratio ? sigma_ratio_bucket(*r.sigma_r_ratio) : "n/a"];
    if (r.rank_rrge == r.rank_svd) ++agree;
  }
  out << "matrices: " << rows.size() << " (errors: " << errors << "), rho = " << format_double(rho)
      << '\n';
  out << "rank agreement with SVD: " << agree << '/' << rows.size() - errors << '\n';
  print_table(out, "pivots / r", {"[1.00,1.05)", "[1.05,1.50)", "[1.5,4.0)", "[4.0,5.0)", ">=5.0"},
              pivot_counts);
  print_table(out, "sigma_min(A11) / sigma_r(A)",
              {"(1e-1,1e0]", "(1e-2,1e-1]", "(1e-3,1e-2]", "<=1e-3", "n/a"}, sigma_counts);
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = args.sources;
  std::vector<std::optional<DenseMatrix>> given(names.size());
  if (args.trials > 0) {
    for (NamedMatrix& item : random_suite(args.trials, args.seed)) {
      names.push_back(std::move(item.name));
      given.emplace_back(std::move(item.matrix));
    }
  }

  std::vector<ReportRow> rows(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      rows[i] = compare_one(names[i], given[i] ? &*given[i] : nullptr, args);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(args.jobs, names.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  if (args.csv.empty()) {
    write_csv_report(rows, out);
    if (!rows.empty()) print_summary(err, rows, args.common.rho);
  } else {
    write_csv_report(rows, std::filesystem::path(args.csv));
    if (!rows.empty()) print_summary(out, rows, args.common.rho);
  }
  for (const ReportRow& r : rows) {
    if (r.error) err << "error: " << r.name << ": " << *r.error << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  double rho = 2.0;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<BatteryResult> results;
  const bool all = args.suite == "all";
  if (all || args.suite == "lemmas") results.push_back(run_lemma_battery(args.trials, args.seed));
  if (all || args.suite == "bounds") {
    results.push_back(run_bounds_battery(args.trials, args.seed, args.rho));
  }
  if (all || args.suite == "examples") results.push_back(run_examples_check());

  int code = kExitOk;
  for (const BatteryResult& r : results) {
    out << r.name << ": " << r.checks - r.failures << '/' << r.checks << " passed";
    if (r.worst_relative_error > 0) {
      out << " (worst relative error " << format_double(r.worst_relative_error) << ')';
    }
    out << '\n';
    if (!r.passed()) {
      if (code == kExitOk) err << "first failure in " << r.name << ": " << r.first_failure << '\n';
      code = kExitVerifyFailed;
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Rank-revealing Gaussian elimination with maximum-volume pivoting", "rrge");
  app.footer(kSourceHelp);
  app.require_subcommand(1);

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand("rank", "Reveal the numerical rank of one matrix");
  rank->add_option("source", rank_args.source, "Matrix source")->required();
  add_common(rank, rank_args.common);
  rank->add_option("--csv", rank_args.csv, "Append a report row to this CSV file");
  rank->add_flag("--check-local", rank_args.check_local, "Check the local maximum volume property");
  rank->add_flag("--check-normal", rank_args.check_normal,
                 "Check the normal maximum volume property (matrices up to 16 x 16)");
  rank->add_option("--block", rank_args.block,
                   "Also check the leading k x k block (default 3 for example1, 2 for example2)")
      ->check(CLI::PositiveNumber);
  rank->add_flag("--timing", rank_args.timing, "Fill the elapsed_ms column of the CSV row");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "Compare against the SVD on a set of matrices");
  compare->add_option("sources", compare_args.sources, "Matrix sources");
  add_common(compare, compare_args.common);
  compare->add_option("--csv", compare_args.csv, "Write the report here instead of stdout");
  compare->add_option("--jobs", compare_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  compare->add_option("--trials", compare_args.trials, "Add this many seeded random matrices");
  compare->add_option("--seed", compare_args.seed, "Seed of the random suite")
      ->capture_default_str();
  compare->add_flag("--timing", compare_args.timing, "Fill the elapsed_ms column");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the certificate and oracle batteries");
  verify->add_option("--suite", verify_args.suite, "lemmas, bounds, examples or all")
      ->check(CLI::IsMember({"lemmas", "bounds", "examples", "all"}))
      ->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "Random instances per battery")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "Battery seed")->capture_default_str();
  verify->add_option("--rho", verify_args.rho, "Pivot growth bound for the bounds battery")
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (rank->parsed()) return cmd_rank(rank_args, out);
    if (compare->parsed()) return cmd_compare(compare_args, out, err);
    return cmd_verify(verify_args, out, err);
  } catch (const IterationLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitIterationCap;
  } catch (const NumericalBreakdown& e) {
    err << "error: " << e.what() << '\n';
    return kExitBreakdown;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << '\n';
    return kExitBreakdown;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace rrge
