#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace oscgauss::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

/// `a:b:step` (inclusive), `log:a:b:count`, or a comma list.
std::vector<double> parse_grid(std::string_view text);
/// Integer grid in the same syntax (no log form).
std::vector<std::size_t> parse_index_grid(std::string_view text);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscgauss::cli
