#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa {

/// Command dispatch for the lpa tool. JSON goes to `out`; human-readable
/// notes go to `err`. Returns 0 on success, 1 on verification failure and
/// 2 on usage or input errors.
///
/// Subcommands: analyze, ef, theta-check, bs, decompose, inverse, refute.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace lpa
