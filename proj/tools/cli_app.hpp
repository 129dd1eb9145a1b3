// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_CLI_APP_HPP
#define SLITWAVE_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace slitwave {

// Dispatches the subcommands {constants, asym, fem, sweep, curve, design,
// field}.  Returns 0 on success, 1 on parse/validation/domain errors, 2 on
// solver or convergence failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slitwave

#endif  // SLITWAVE_CLI_APP_HPP
