#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatcf {

/* Runs one command ("algebra", "expand", "certify", "height",
 * "counterexample", "verify"); args excludes the program name.
 * Exit codes: 0 ok, 2 input error, 3 admissibility failure, 4 internal alarm.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatcf
