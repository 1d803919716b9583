#pragma once

#include <string>
#include <vector>

namespace fdd::cli {

// Grid text: comma-separated entries, each either a single value, a fraction
// "p/q", or an inclusive range "start:stop[:step]" (endpoints kept within half
// a step). Throws std::invalid_argument naming the offending token.
std::vector<double> parse_value_grid(const std::string& text);

// Same syntax restricted to integers.
std::vector<int> parse_index_grid(const std::string& text);

// Full batch interface; returns the process exit status:
// 0 success, 1 usage or I/O error, 2 completed sweep with failed cells.
int main_entry(int argc, char** argv);

}  // namespace fdd::cli
