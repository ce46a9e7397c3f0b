#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trop::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kDomainError = 3, kCapacityError = 4 };

// args excludes the program name. Input is read from `in` when neither an
// inline argument nor --file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace trop::cli
