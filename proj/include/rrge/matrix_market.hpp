#pragma once

#include <filesystem>
#include <iosfwd>

#include "rrge/matrix.hpp"

namespace rrge {

/// Reads a real Matrix Market file ("array" or "coordinate"; "general",
/// "symmetric" or "skew-symmetric"; field "real" or "integer") into a dense
/// matrix. Symmetric storage is expanded. Throws ParseError carrying the line
/// number, or UnsupportedFormat for complex and pattern fields.
DenseMatrix read_matrix_market(const std::filesystem::path& path);
DenseMatrix read_matrix_market(std::istream& in);

/// Writes "array real general" with 17 significant digits, which reads back
/// bit-identical.
void write_matrix_market(const DenseMatrix& a, const std::filesystem::path& path);
void write_matrix_market(const DenseMatrix& a, std::ostream& out);

}  // namespace rrge
