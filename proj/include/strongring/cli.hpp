#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strongring {

// Entry point of the strongring tool. Exit codes: 0 success, 1 verification
// or computation failure, 2 usage/parse error, 3 resource cap exceeded.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace strongring
