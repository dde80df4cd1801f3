/// @file cli.hpp
/// @brief Command-line front end, callable in-process for testing.
///
/// Subcommands: nf, iso, normal, hilbert, confluence, validate.
/// Exit codes: 0 positive result, 1 negative decision (not isomorphic,
/// unresolved overlaps, invalid algebra, counterexample found), 2 error
/// (unreadable input, schema violation, unsupported comparison).
/// Structured output is JSON on @p out; `nf` prints the plain polynomial;
/// diagnostics and seeds go to @p err.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qaw {

/// Runs one command; @p args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaw
