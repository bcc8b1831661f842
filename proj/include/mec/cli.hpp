#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mec::cli {

enum ExitCode : int { ok = 0, no = 1, usage = 2, refusal = 3 };

/// Runs one `mec` command. `args` excludes the program name; "-" as an
/// input path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mec::cli
