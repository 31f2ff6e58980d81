#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permcf/cfrac.hpp"

namespace permcf::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kVerifyFailed = 2 };

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads a coefficient file: one "k: polynomial" per line, optionally prefixed
// by the sequence name (alpha, beta, gamma, delta). Unprefixed lines fill
// alpha for S and T fractions, beta for J. Blank lines and '#' comments are skipped.
CFSpec parse_cf_file(std::string_view text, CFKind kind);

}  // namespace permcf::cli
