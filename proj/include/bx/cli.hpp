#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bx {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitUndefined = 2, kExitLawFailure = 3 };

// Runs the tool on `args` (without the program name). Never throws.
//
//   apply    --bx NAME --dir to|from --update U [--trace T] [--output FILE]
//   check    --bx NAME [--laws all|a,b,...] [--cap N] [--format text|value]
//   classify --bx NAME
//   report   [--cap N]
//
// Every subcommand accepts --config FILE holding a record in the value
// grammar ({bx = "fst-lens", dir = "to", ...}); flags override it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bx
