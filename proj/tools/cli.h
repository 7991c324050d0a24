#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dwfs::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,     // bad arguments, unreadable input, parse error
    exit_divergent = 2, // semantics disagree
    exit_capacity = 3,  // an oracle or saturation bound was exceeded
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace dwfs::cli
