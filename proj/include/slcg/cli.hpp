#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slcg::cli {

/// Exit codes: 0 success, 1 a checked property fails, 2 invalid input, 3 guard exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slcg::cli
