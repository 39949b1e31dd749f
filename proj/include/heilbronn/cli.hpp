#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heilbronn {

/* Run one subcommand. Reports go to `out` (or the --out file), diagnostics
 * to `err`. Exit status: 0 success, 2 invalid arguments, 3 precondition
 * violation, 4 verify-suite failure. */
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// Brute-force oracle suite behind the `verify` subcommand; returns the
// number of failed items.
int run_verify_suite(std::ostream& out);

} // namespace heilbronn
