// The qmac command-line front end, kept as a library so tests can drive it
// without spawning processes.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmac::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInconclusive = 2,
  kCounterexample = 3,
  kFailure = 4,  // method disagreement or a failed check
};

/// Upper bound on --n unless --allow-large is given.
inline constexpr std::size_t kPrecisionCap = 1'000'000;

/// Environment variable naming a directory for cached constant tables.
inline constexpr const char* kCacheDirVariable = "QMAC_CACHE_DIR";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmac::cli
