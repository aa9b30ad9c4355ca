#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gizatullin/dpd.hpp"

namespace giz {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_invalid = 2,
  exit_not_gizatullin = 3,
  exit_toric = 4,
};

/// Reads {"d_plus": [["0","-1/3"]], "d_minus": [["1","-2"]]}. Throws
/// ParseError on malformed documents and InvalidPair on invalid data.
DpdPair parse_pair_document(const std::string& text);
DpdPair read_pair_file(const std::string& path);

/// Inverse of parse_pair_document.
std::string write_pair_document(const DpdPair& pair);

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace giz
