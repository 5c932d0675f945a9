//
// Project     : mint
// Module      : cli
// Description : batch command-line surface over every module
//
#pragma once

#include <string>
#include <vector>

namespace mint {

// Exit codes: 0 success, 1 a verification predicate failed, 2 input error.
int run_cli(int argc, const char* const* argv);

// Same, for in-process callers; args omit the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace mint
