#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace charcodes::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 decoding failure
/// (diagnostic block printed), 2 usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace charcodes::cli
