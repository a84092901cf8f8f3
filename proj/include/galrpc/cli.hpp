#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galrpc::cli {

// Runs the command line given as argv-style arguments (program name not
// included). Machine-readable results (key hex, key=value stats) go to out,
// diagnostics and warnings to err.
//
// Exit codes: 0 ok, 2 parameter error, 3 format error, 4 decoding failure,
// 5 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace galrpc::cli
