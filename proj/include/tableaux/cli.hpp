#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tableaux {

// Exit codes: 0 success, 1 bad input, 2 a property check or replay failed.
// A file argument of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tableaux
