#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richgrass {

/// Command-line front end. Returns the process exit code: 0 on success, 1 on
/// a domain error (empty variety, point outside the interval), 2 on an
/// argument error, 3 on a selftest disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace richgrass
