#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace honeycomb::cli {

/// Exit codes: 0 success, 1 a decision answered "false"/"infeasible", 2 usage
/// or input errors (message on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace honeycomb::cli
