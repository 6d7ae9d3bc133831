#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degen::cli {

/// Runs the command line `args` (without the program name). Machine-readable
/// output goes to `out`, diagnostics to `err`. Returns 0 on success, 1 when a
/// check is falsified, 2 on usage or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,3,5", "0..8" or mixtures such as "1,4..6".
std::vector<unsigned> parse_int_list(const std::string& text);

}  // namespace degen::cli
