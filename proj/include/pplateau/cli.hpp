#ifndef PPLATEAU_CLI_HPP
#define PPLATEAU_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace pplateau {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitInput = 2 };

struct RunConfig {
  std::string subcommand;  // solve | flatnorm | sunflower | slice-check | validate
  std::string output;      // empty: standard output
  std::string emit = "text";  // text | json
  std::optional<std::uint64_t> seed;
  int verbosity = 0;

  // Inputs shared by several subcommands.
  std::string complex;
  std::string chain;
  std::string integrand;

  // solve
  std::string boundary;
  std::string t0;
  std::string phi;
  std::string cap = "auto";
  std::size_t max_minimizers = 64;

  // flatnorm
  std::string mode = "real";  // real | integral | h
  std::int64_t flat_cap = 3;

  // sunflower
  int petals = 8;
  std::string petal_phi;  // comma separated
  std::string disk_pairing = "0";
  std::string disk_area = "1";
  std::string petal_areas;  // comma separated, default 1 each
  std::string variant = "full";  // full | partial=<1-based arc list>
  std::string render;
  std::string write_scenario;
  bool check = false;

  // slice-check
  std::size_t samples = 100000;
  unsigned workers = 1;
  std::int64_t multiplicity = 2;
  double tolerance = 0.05;
};

/// Executes one subcommand. Returns 0 on success, 1 on a domain error
/// (infeasible, degenerate, invalid complex) and 2 on I/O or parse errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses command-line arguments into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pplateau

#endif
