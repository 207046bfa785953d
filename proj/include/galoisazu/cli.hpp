#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "galoisazu/error.hpp"

namespace galoisazu::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// 1 when the input is well formed but a certified property fails, 2 for
/// parse errors and unmet preconditions.
int exit_code(ErrorCode code);

/// Runs one command; `args` excludes the program name. Returns the exit code:
/// 0 ok, 1 check failed, 2 parse error or precondition, 3 internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace galoisazu::cli
