#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rooks::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_input = 2,
    exit_resource_limit = 3,
};

/// Runs one command. args excludes the program name. The result is written to
/// out; diagnostics, usage text and timing go to err. `-` as an input file
/// reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rooks::cli
