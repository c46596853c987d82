#pragma once

#include <string>
#include <vector>

namespace nzpoly {

/// Entry point behind the nzpoly binary. args excludes the program name.
/// Exit status: 0 all checks passed, 1 at least one theorem check failed,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args);

} // namespace nzpoly
