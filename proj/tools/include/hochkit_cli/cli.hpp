#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hochkit/io.hpp"

namespace hochkit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidation = 2;
inline constexpr int kSizeGuard = 3;
inline constexpr int kInternal = 4;

/// Runs one command (args exclude the program name). Reports and error objects
/// go to `out` or the --output file; usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// File name and content of every bundled fixture, in write order.
[[nodiscard]] std::vector<std::pair<std::string, io::Json>> fixture_files();

}  // namespace hochkit::cli
