#pragma once

// The two small languages of the command line.
//
// Set expressions:
//   set     := term ('|' term)*
//   term    := unary ('&' unary)*
//   unary   := '~' unary | primary
//   primary := 'empty' | 'all' | ATOM | '(' set ')'
//
// Measure expressions:
//   expr := NAME | 'zero' | 'infinity'
//         | ('meet' | 'join') '(' expr (',' expr)* ')'
//         | ('meet_jordan' | 'join_jordan' | 'add') '(' expr ',' expr ')'
//         | 'scale' '(' RATIONAL ',' expr ')'
//
// Whitespace is insignificant. Errors carry the 1-based line and column of
// the offending token.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat::cli {

enum class ExitCode : int {
  Ok = 0,
  CheckFailed = 1,
  ParseError = 2,
  SemanticError = 3,
  ResourceCap = 4,
};

/// A user-facing failure with its exit code and a rendered diagnostic.
class CliError : public std::runtime_error {
public:
  CliError(ExitCode code, const std::string& diagnostic) : std::runtime_error(diagnostic), code_(code) {}
  ExitCode code() const noexcept { return code_; }

private:
  ExitCode code_;
};

/// 1-based position inside a source text.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

SourcePos position_of(std::string_view text, std::size_t offset);

/// "error: <what> <line>:<col>: <message>" followed by the offending source
/// line and a caret under the column.
std::string render_diagnostic(std::string_view what, std::string_view text, std::size_t offset,
                              std::string_view message);

/// Identifiers usable as atom and measure names.
bool is_identifier(std::string_view s);

/// Parses and evaluates a set expression over `space`. Throws CliError with
/// ParseError for malformed input and SemanticError for unknown atoms.
MeasurableSet evaluate_set(std::string_view text, const MeasurableSpace& space);

struct MeasureExpr {
  enum class Kind { Name, Zero, Infinity, Meet, Join, MeetJordan, JoinJordan, Add, Scale };

  Kind kind = Kind::Name;
  std::size_t offset = 0;
  std::string name;  // Kind::Name
  Rational factor;   // Kind::Scale
  std::vector<MeasureExpr> args;
};

/// Throws CliError(ParseError) on syntax or arity errors.
MeasureExpr parse_measure_expression(std::string_view text);

/// Resolves names against a lookup function returning nullptr for unknown
/// names. Evaluation failures (unknown names, undefined differences) become
/// CliError(SemanticError) pointing at the failing subexpression.
using MeasureLookup = std::function<const Measure*(const std::string&)>;
Measure evaluate_measure(const MeasureExpr& expr, std::string_view text, const MeasurableSpace& space,
                         const MeasureLookup& lookup);

} // namespace measlat::cli
