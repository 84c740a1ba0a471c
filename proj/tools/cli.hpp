#pragma once

#include <iosfwd>

namespace frac::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the `frac` command line. Returns 0 on success, 1 on usage, domain
/// or parameter errors, 2 when a `verify` check exceeds its tolerance.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frac::cli
