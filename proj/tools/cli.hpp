#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace codedcache::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Runs one command; `args` excludes the program name. Normal output goes to
/// `out` unless --out names a file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codedcache::cli
