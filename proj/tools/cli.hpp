#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tate::cli {

enum ExitCode : int { kOk = 0, kValidationError = 2, kComputationError = 3 };

/// Runs one command line.  args excludes the program name.  Artifacts go to
/// out (or --out), errors as one JSON object per line to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,-2,0" -> {1,-2,0}; throws std::invalid_argument.
std::vector<int> parseIntList(const std::string& text);

} // namespace tate::cli
