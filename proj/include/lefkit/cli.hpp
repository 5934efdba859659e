#ifndef LEFKIT_CLI_HPP
#define LEFKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lefkit {

/// Runs the command line tool. Exit codes: 0 analysis completed, 1 a property
/// asserted with --assert failed, 2 input or usage error, 3 the randomized
/// gin computation failed to certify a result.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lefkit

#endif
