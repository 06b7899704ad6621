#pragma once

#include <iosfwd>

namespace stovar::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,         // unreadable or malformed input, bad flags
  kPreconditionFailed = 2, // not square, not type 1, ...
  kInconclusive = 3,       // no contraction power up to --pmax
};

inline constexpr const char* kSchema = "stovar/1";

// Entry point behind the `stovar` executable. Subcommands: analyze,
// variation, pattern, classify2x2. Reports go to `out`, diagnostics to
// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stovar::cli
