#pragma once

// In-process entry point for the command-line tool, so tests can drive the
// full argument/IO/exit-code surface without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace vcrit::cli {

// args is argv without the program name.  Returns the process exit code:
// 0 success / affirmative verdict, 1 negative verdict, 2 usage or input
// format error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vcrit::cli
