#pragma once

// Command-line front end. `run` takes the arguments after the program name and
// returns the process exit status:
//   0  success
//   1  malformed input (bad flags, unreadable or malformed JSON)
//   2  invariant violation (incompatible factors, bad Foster data, failed verify)
//   3  domain error (Im lambda0 <= 0, non-Herglotz data, singular resolvent)

#include <ostream>
#include <string>
#include <vector>

namespace lsys::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsys::cli
