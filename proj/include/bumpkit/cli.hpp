#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bumpkit {

// Runs the bumpkit command line. args excludes the program name.
// Exit codes: 0 success, 1 verification/output failure, 2 usage or cap error.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace bumpkit
