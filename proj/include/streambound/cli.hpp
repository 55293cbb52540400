#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "streambound/fib.hpp"
#include "streambound/topology.hpp"

namespace streambound {

// Process exit codes. Distinct nonzero codes let scripts tell a bad flag from
// a failed bound cross-check from an unsolvable instance from an arithmetic
// overflow.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundViolation = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitOverflow = 5;

// Everything a subcommand needs, parsed from the command line. Values are
// validated against the library preconditions at dispatch time; a violated
// precondition surfaces as a usage error naming the constraint.
struct RunConfig {
  std::string command;
  int U = 2;
  Fanout k = Fanout::finite(2);
  int P = 0;
  long long t_max = 7;
  long long chunks = 3;
  unsigned long long seed = 0;
  long long k_max = 6;
  long long cap = 10'000'000;
  std::string strategy;
  std::string format = "csv";           // csv | json
  std::string out;                      // empty = standard output
  std::string trace_out;                // empty = no trace export
  std::vector<ForcedPlacement> forced;  // intertwine --force-place pins
};

// Parses args (program name excluded), dispatches the chosen subcommand,
// writes the payload to `out` (or to the --out file) and any notices to
// `err`. Returns an exit code from the table above. Output bytes are stable
// across runs with identical flags and seed.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace streambound
