#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mop {

// Command dispatch behind the mopkit binary; split out so tests can drive
// the exact surface users see. args excludes the program name.
// Exit codes: 0 success/valid/found, 1 invalid/refuted/failed, 2 usage or
// parse error, 3 search budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mop
