#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clarcube::cli {

/// Runs one command. argv[0] is the program name. Returns 0 on success, 1 when
/// a verification fails, 2 on usage, parse or input errors.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace clarcube::cli
