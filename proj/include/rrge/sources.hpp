#pragma once

#include <string_view>

#include "rrge/matrix.hpp"

namespace rrge {

/// Builds a matrix from a source spec:
///
///   peters:M                 full Peters matrix
///   peters-bordered:M        Peters matrix with only the first row and last column filled
///   example1                 7 x 4 normal-but-not-local example
///   example2:D               4 x 3 local-but-not-normal example
///   random:M,N,R,GAP,SEED    random matrix with R leading singular values (R = 0: zero matrix)
///   zero:M,N                 zero matrix
///   <path>                   Matrix Market file
///
/// Throws ParseError (line 0) for malformed specs.
DenseMatrix load_matrix_source(std::string_view spec);

}  // namespace rrge
