#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdouble {

// Command-line front end, callable in-process for tests.
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 internal oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdouble
