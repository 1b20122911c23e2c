#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrecolor {

// Exit codes: 0 success or YES, 1 parse error, 2 failed precondition, NO
// under --expect-yes, or an oracle disagreement, 3 state budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrecolor
