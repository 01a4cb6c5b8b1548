#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace rrge {

/// Outcome of a randomized or fixed verification battery.
struct BatteryResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_relative_error = 0.0;
  /// Full context of the first failing check.
  std::string first_failure;

  bool passed() const noexcept { return checks > 0 && failures == 0; }
};

/// Each volume-ratio formula against brute-force determinant ratios on
/// `trials` random instances per formula (k <= 6), relative tolerance 1e-9.
BatteryResult run_lemma_battery(std::size_t trials, std::uint64_t seed);

/// Beta-bound and singular value certificates on the seeded random suite.
BatteryResult run_bounds_battery(std::size_t trials, std::uint64_t seed, double rho = 2.0);

/// The two counterexample matrices: volumes, the factor-99 exchange and both
/// maximum-volume predicates.
BatteryResult run_examples_check();

}  // namespace rrge
