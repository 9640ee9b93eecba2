#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trirep {

/// Runs the command line tool. Exit codes: 0 success / property holds,
/// 1 validation or property failure (witness on err), 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace trirep
