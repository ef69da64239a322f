#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schemekit::cli {

// Exit codes: 0 success, 1 property violation, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schemekit::cli
