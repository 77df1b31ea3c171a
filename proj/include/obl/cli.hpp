#pragma once

#include <string>
#include <vector>

namespace obl {

// Entry point shared by the obl binary and the acceptance suite. argv-style
// arguments without the program name. Output goes to `out` when given
// (stdout otherwise); returns a process exit code.
int run_cli(const std::vector<std::string>& args, std::string* out = nullptr);

} // namespace obl
