#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bqf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output is
/// deterministic; exit status 0 on success, 1 when the input is well formed
/// but mathematically rejected (e.g. positive discriminant), 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqf::cli
