#ifndef QJ_CLI_HPP
#define QJ_CLI_HPP

#include <string>
#include <vector>

namespace qj {

// stamped into every artifact
extern const char* const kVersion;

// Command-line driver.  Subcommands: unit, lattice, zeta, jeps, jqt,
// norm, classnum, minpoly, portrait.  Artifacts (JSON, or CSV where the
// schema is tabular) embed the resolved configuration and kVersion, and
// identical configurations produce byte-identical bytes.  Returns the
// process exit status: 0 success, 1 usage or infeasible-request error,
// 2 theorem-level consistency failure.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args); // args without argv[0]

} // namespace qj

#endif
