#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when the library reports an error, 2 on a usage error.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab
