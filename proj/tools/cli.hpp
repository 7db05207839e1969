#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gieseker::cli {

/// Exit codes: 0 success, 1 malformed input, 2 input outside a theorem's hypotheses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 1;
inline constexpr int exit_regime = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gieseker::cli
