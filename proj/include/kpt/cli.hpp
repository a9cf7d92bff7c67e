#pragma once

// The kpt command line, callable in-process.
//
// Exit codes: 0 ok, 1 domain-negative (violations, false verdicts),
// 2 input error, 3 some verdict left Unknown.

#include <iosfwd>
#include <string>
#include <vector>

namespace kpt {

/// args excludes the program name, e.g. {"analyze", "builtin:comb:2"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpt
