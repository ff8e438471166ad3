#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minlam::io {

/// Entry point of the `minlam` command-line tool; args exclude the program name.
/// Returns 0 when every requested certificate passes, 1 on certificate failure
/// and 2 on bad arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minlam::io
