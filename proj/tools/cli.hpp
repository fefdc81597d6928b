#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exptaylor/expr.hpp"

namespace exptaylor::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,
    kDomain = 2,
    kCheckFailed = 3,
};

/// Parses `a`, `a+bi`, `a-bi`, `bi` (decimal or exponent notation).
Complex parse_complex(const std::string& text);

/// Comma-separated reals.
std::vector<double> parse_vector(const std::string& text);

/// Runs one invocation; args exclude the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exptaylor::cli
