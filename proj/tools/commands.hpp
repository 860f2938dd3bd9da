#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzy::cli {

// args excludes the program name. Returns 0 on success, 1 on a model error,
// 2 on a usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzy::cli
