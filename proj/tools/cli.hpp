#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addcyc::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 when every requested check passes, 1 on a failed check or an
/// invalid code, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addcyc::cli
