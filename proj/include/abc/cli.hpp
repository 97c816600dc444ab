#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitCap = 65;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abc
