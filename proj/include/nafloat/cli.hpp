#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nafloat::cli {

/// Runs one command. Returns 0 on success, 1 on a domain error and 2 on a
/// usage error; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nafloat::cli
