#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace aqrm {

// Runs the command-line tool; `args` excludes the program name.  Writes to
// the given streams and returns the process exit code:
//   0   success (verifications all passed, outputs written)
//   2   a verification failed, or the symbolic layer detected an
//       inconsistency in its own tables
//   64  usage or configuration error (bad flags, invalid parameters,
//       unwritable output, ill-conditioned fit setup)
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace aqrm
