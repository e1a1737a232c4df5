#pragma once

#include <ostream>
#include <span>
#include <string>

namespace postlab::cli
{

enum ExitCode : int
{
  exit_ok = 0,
  /// A decision answered "no" and --exit-status was given.
  exit_no = 1,
  exit_usage = 2,
  exit_limit = 3
};

/// Runs one command; `args` excludes the program name.  JSON on `out` unless --plain, messages on `err`.
int run( std::span<const std::string> args, std::ostream& out, std::ostream& err );

} // namespace postlab::cli
