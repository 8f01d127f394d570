#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rerail::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

// Entry point of the rerail tool. Verdicts go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rerail::cli
