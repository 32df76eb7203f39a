#pragma once

#include <iosfwd>

namespace parabolic::cli {

enum ExitCode { ok = 0, domain_error = 1, malformed_input = 2 };

// Parses argv, runs one subcommand and writes JSON to `out`. Input documents
// come from the positional path or, with --json, from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out);

}  // namespace parabolic::cli
