#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnastore::cli {

// Exit codes: 0 success, 1 decode/verification failure, 2 usage or
// parameter error, 3 I/O error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dnastore::cli
