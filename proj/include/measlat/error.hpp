#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace measlat {

enum class ErrorKind {
  UndefinedDifference,
  SpaceMismatch,
  TooLargeToEnumerate,
  EmptyFamily,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `atom()` is set when the failure is
/// attributable to a single atom (e.g. an undefined atom-wise difference).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> atom = std::nullopt)
      : std::runtime_error(what), kind_(kind), atom_(atom) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> atom() const noexcept { return atom_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> atom_;
};

} // namespace measlat
