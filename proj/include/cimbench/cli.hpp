#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cimbench {

// Command-line entry point. `args` excludes the program name.
//
//   gen   --n N --seed S --out FILE
//   solve --solver {hn|sa|htnn|cim} --instance FILE [--seed S]
//         [--config FILE] [--trace OUT] [--clock wall|work]
//   bench --instance FILE [--solvers hn,sa,htnn,cim] [--trials K] [--seed S]
//         --target (E|auto) --out-dir DIR [--config FILE] [--clock wall|work]
//         [--auto-runs K] [--target-depth F] [--grid-points G] [--workers W]
//
// Returns 0 on success, 1 on a runtime error, 2 on a usage error.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cimbench
