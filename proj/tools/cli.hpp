#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace campana::cli {

/// Entry point of the `campana` tool. args[0] is the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace campana::cli
