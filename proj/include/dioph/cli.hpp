#pragma once

#include <ostream>
#include <span>
#include <string>

namespace dioph::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args excludes the program name). The report goes to
/// out, diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
