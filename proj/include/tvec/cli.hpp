#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tvec {

/// Runs one command.  Exit codes: 0 = success/true, 1 = predicate
/// false/rejected/not found, 2 = usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tvec
