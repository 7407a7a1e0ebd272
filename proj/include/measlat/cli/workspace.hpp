#pragma once

// Workspace and table files.
//
// A workspace is one JSON document:
//
//   {"atoms": ["a", "b"],
//    "measures": {"mu": {"a": "1", "b": "0"}},
//    "signed": {"s": {"a": "2", "b": "-3"}}}
//
// "measures" and "signed" may also be arrays of entries of the form
// {"name": "mu", "weights": {...}}. Every value is a string in the exact
// encoding ("k", "p/q", "inf"; signed values may carry a leading '-').
// Every measure lists every declared atom exactly once.
//
// A table file gives a value for every measurable set, keyed by set
// expression:
//
//   {"values": {"empty": "0", "a": "0", "b": "0", "a|b": "1"}}

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "measlat/cli/expressions.hpp"
#include "measlat/measures.hpp"

namespace measlat::cli {

struct Workspace {
  MeasurableSpace space;
  /// In file order.
  std::vector<std::pair<std::string, Measure>> measures;
  std::vector<std::pair<std::string, SignedMeasure>> signed_measures;

  const Measure* find_measure(const std::string& name) const;
  const SignedMeasure* find_signed(const std::string& name) const;
};

/// `source` names the document in diagnostics. JSON syntax errors and
/// malformed numbers raise CliError(ParseError); structural problems raise
/// CliError(SemanticError).
Workspace parse_workspace(std::string_view json_text, std::string_view source);
Workspace load_workspace(const std::string& path);

/// Resolves every key of the table against the workspace space. Missing or
/// duplicate sets are semantic errors.
SetFunctionTable parse_table(std::string_view json_text, std::string_view source, const MeasurableSpace& space);
SetFunctionTable load_table(const std::string& path, const MeasurableSpace& space);

/// Reads a whole file; a missing file is a SemanticError.
std::string read_file(const std::string& path);

} // namespace measlat::cli
