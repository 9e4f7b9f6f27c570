#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bialg {

// Full command dispatcher behind the executable. Exit codes:
//   0  every executed verdict true
//   1  at least one verdict false
//   2  input error (parse/schema/missing fields); no verdict executed
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bialg
