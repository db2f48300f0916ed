#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polaritylab::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, cap = 3 };

/// args excludes the program name. Graph input is read from `in` unless
/// graph6 strings are given as positional arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polaritylab::cli
