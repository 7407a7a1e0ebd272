#pragma once

// The `measlat` subcommands. Each returns a process exit code (see ExitCode)
// and writes its report to `out` and diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "measlat/cli/expressions.hpp"

namespace measlat::cli {

struct Options {
  /// Max atoms for anything that enumerates all 2^n sets.
  std::size_t cap_atoms = kDefaultSetCap;
  /// Max atoms for partition enumeration.
  std::size_t cap_partition_atoms = kDefaultPartitionCap;
  /// Max family size for the partition-assignment oracle.
  std::size_t cap_family = 4;
  std::uint64_t seed = 0;
  /// Random lower/upper bounds drawn by verify's glb/lub checks.
  std::size_t samples = 1000;
  bool json = false;
};

int cmd_eval(const std::string& workspace_path, const std::string& measure_expr, const std::string& set_expr,
             const Options& opts, std::ostream& out, std::ostream& err);

int cmd_check(const std::string& workspace_path, const std::string& table_path, const Options& opts,
              std::ostream& out, std::ostream& err);

int cmd_jordan(const std::string& workspace_path, const std::string& signed_name, const Options& opts,
               std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& workspace_path, const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Usage errors exit with ExitCode::ParseError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace measlat::cli
