#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lep::cli {

// Exit codes: 0 success, 1 negative result (check failure, unprovable
// formula, failed self-test), 2 parse, IO or usage error.
enum Exit : int { Ok = 0, Negative = 1, Usage = 2 };

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lep::cli
