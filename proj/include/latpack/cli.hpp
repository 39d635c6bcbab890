#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latpack/density.hpp"

namespace latpack::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2,3,3,5x4,7x8": comma-separated values, "vxc" repeats v c times.
std::vector<Int> parse_sequence(const std::string& text);

}  // namespace latpack::cli
