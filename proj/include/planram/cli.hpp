#ifndef PLANRAM_CLI_HPP
#define PLANRAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace planram {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;

// Runs one command line (args excludes the program name). Standard input is read only by
// commands that take graphs; --out redirects the primary output to a file.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace planram

#endif
