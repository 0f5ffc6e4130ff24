/* Command-line entry point: rga, reduce, tune, simulate, report, sweep,
 * and the end-to-end pipeline.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refrigimc {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 iff no stage errored.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refrigimc
