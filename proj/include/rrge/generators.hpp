#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rrge/matrix.hpp"

namespace rrge {

enum class PetersPattern {
  /// Unit upper triangular, every entry above the diagonal -1.
  kFull,
  /// -1 only in the first row and the last column above the diagonal.
  kBordered,
};

/// m x m unit upper triangular matrix on which complete pivoting keeps the
/// diagonal and misses the near singularity. With kFull, sigma_m = O(2^-m).
DenseMatrix gen_peters(std::size_t m, PetersPattern pattern = PetersPattern::kFull);

/// 7 x 4 0/1 matrix whose leading 3 x 3 block has normal but not local
/// maximum volume. Each column has three ones and any two columns share
/// exactly one row, so every three columns have singular values
/// (sqrt5, sqrt2, sqrt2).
DenseMatrix gen_example_normal_not_local();

/// 4 x 3 matrix [[1,0,0],[0,1,0],[d,-1,-d],[-1,d,-d]] whose leading 2 x 2
/// block has local but not normal maximum volume. Requires 0 < d < 1.
DenseMatrix gen_example_local_not_normal(double d);

/// U diag(sigma) V^T with Haar-random orthogonal U, V. The leading r_true
/// singular values are log-uniform in [1e-2, 1]; the tail decays as
/// sigma_{r_true+i} = sigma_{r_true} * gap^i. Bit-identical for a fixed seed.
DenseMatrix gen_random_rank_deficient(std::size_t m, std::size_t n, std::size_t r_true,
                                      double gap, std::uint64_t seed);

/// Haar-random n x n orthogonal matrix.
DenseMatrix gen_random_orthogonal(std::size_t n, std::uint64_t seed);

/// Entries independent standard normal.
DenseMatrix gen_gaussian(std::size_t m, std::size_t n, std::uint64_t seed);

struct NamedMatrix {
  std::string name;
  DenseMatrix matrix;
};

/// The seeded desk-scale suite: m, n uniform in [1, max_dim], rank uniform in
/// [0, min(m, n)] (rank 0 is the zero matrix), gap alternating 1e-8 / 1e-12.
std::vector<NamedMatrix> random_suite(std::size_t count, std::uint64_t seed,
                                      std::size_t max_dim = 40);

}  // namespace rrge
