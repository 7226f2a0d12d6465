#pragma once

#include <iosfwd>

namespace connfn {

// Exit codes: 0 answered (whatever the verdict), 1 invalid input,
// 2 capacity exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace connfn
