/** @file cli.hpp
 *  @brief Command line entry point, callable in-process.
 *
 *  Subcommands: train, explain, drilldown, shapley, game (dividends,
 *  properties, check, unanimity, induced, quotient), demo-titanic,
 *  demo-cars, make-data. Every run is deterministic for fixed seeds.
 *  Relative input paths that do not exist are also tried under
 *  $CIUKIT_DATA_DIR.
 */

#ifndef CIU_CLI_HPP
#define CIU_CLI_HPP

#include <string>
#include <vector>

namespace ciu {

/// args excludes the program name; returns the process exit code.
int run_cli(std::vector<std::string> args);

} // namespace ciu

#endif // CIU_CLI_HPP
