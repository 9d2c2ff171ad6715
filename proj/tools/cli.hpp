#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace longhop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs the longhop command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace longhop::cli
