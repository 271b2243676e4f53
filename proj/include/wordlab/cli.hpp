#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordlab {

/// Runs one command (args exclude the program name) and writes the emitted
/// document to out. Exit codes: 0 verdict true / report complete, 1 verdict
/// false, 2 usage or validation error, 3 enumeration budget refusal,
/// 4 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wordlab
