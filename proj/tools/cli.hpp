#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace galois::cli {

// Runs the galois-energy command line on args (without the program name).
// Exit codes: 0 success / WIN / no mismatch, 1 LOSE / mismatches found,
// 2 usage, parse or validation errors, 3 iteration cap reached.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galois::cli
