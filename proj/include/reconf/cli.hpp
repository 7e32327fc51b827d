#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reconf {

// Exit codes: 0 ok, 1 input error, 2 infeasible parameters,
// 3 verification/invariant failure.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace reconf
