#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpistego::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kIoFailure = 2;
inline constexpr int kCapacity = 3;
inline constexpr int kBadInput = 4;  // malformed PGM/key, inconsistent key
inline constexpr int kFailure = 5;

/// Runs one command line (args excludes the program name). Data goes to
/// files or `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bpistego::cli
