#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberosc {

// Batch front end. Parses one subcommand plus flags, dispatches to the
// library, prints a deterministic JSON report on `out` and human
// diagnostics (including wall time) on `err`.
//
// Exit codes: 0 success with all asserted invariants passing, 1 invariant
// failure (report still emitted), 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a 64 digest used for the report's input echo.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace fiberosc
