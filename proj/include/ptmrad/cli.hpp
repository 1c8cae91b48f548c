#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptmrad::cli {

// Runs one ptmrad command. args excludes the program name. Returns the
// process exit code: 0 iff parsing succeeded and every verification in the
// invoked subcommand passed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace ptmrad::cli
