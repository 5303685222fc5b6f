#pragma once

#include <iosfwd>

namespace superlocal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitSizeLimit = 2;
inline constexpr int kExitInternal = 3;

/// Entry point of the `superlocal` tool. Subcommands: bounds, oracle, frac,
/// edgecolour, linegraph, search, gen. An input argument is a file path, "-"
/// for `in`, or an inline graph6 / multigraph encoding.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace superlocal::cli
