#include "rrge/sources.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "rrge/error.hpp"
#include "rrge/generators.hpp"
#include "rrge/matrix_market.hpp"

namespace rrge {

namespace {

std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_arg(std::string_view tok, std::string_view spec) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("bad argument '" + std::string(tok) + "' in source '" + std::string(spec) + "'",
                     0);
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(v)) throw ParseError("non-finite argument in '" + std::string(spec) + "'", 0);
  }
  return v;
}

void expect_args(const std::vector<std::string_view>& args, std::size_t count,
                 std::string_view spec) {
  if (args.size() != count) {
    throw ParseError("source '" + std::string(spec) + "' expects " + std::to_string(count) +
                         " argument(s)",
                     0);
  }
}

}  // namespace

DenseMatrix load_matrix_source(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : spec.substr(colon + 1);

  try {
    if (name == "example1" && colon == std::string_view::npos) {
      return gen_example_normal_not_local();
    }
    if (colon != std::string_view::npos) {
      const auto args = split_args(rest);
      if (name == "peters" || name == "peters-bordered") {
        expect_args(args, 1, spec);
        const auto m = parse_arg<std::size_t>(args[0], spec);
        return gen_peters(m, name == "peters" ? PetersPattern::kFull : PetersPattern::kBordered);
      }
      if (name == "example2") {
        expect_args(args, 1, spec);
        return gen_example_local_not_normal(parse_arg<double>(args[0], spec));
      }
      if (name == "zero") {
        expect_args(args, 2, spec);
        return DenseMatrix(parse_arg<std::size_t>(args[0], spec),
                           parse_arg<std::size_t>(args[1], spec));
      }
      if (name == "random") {
        expect_args(args, 5, spec);
        const auto m = parse_arg<std::size_t>(args[0], spec);
        const auto n = parse_arg<std::size_t>(args[1], spec);
        const auto r = parse_arg<std::size_t>(args[2], spec);
        const auto gap = parse_arg<double>(args[3], spec);
        const auto seed = parse_arg<std::uint64_t>(args[4], spec);
        if (r == 0) return DenseMatrix(m, n);
        return gen_random_rank_deficient(m, n, r, gap, seed);
      }
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(spec) + ": " + e.what(), 0);
  }
  return read_matrix_market(std::filesystem::path(std::string(spec)));
}

}  // namespace rrge
