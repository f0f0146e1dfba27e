#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace combinadics {

/// Machine-readable failure categories. The CLI renders them as
/// `ERROR <kind>: <detail>`, so the names are part of the tool's contract.
enum class ErrorKind {
  EmptyRepresentation,
  NotStrictlyDecreasing,
  NotStrictlyIncreasing,
  EmptyCombination,
  DegreeMismatch,
  PredecessorOfZero,
  ElementOutOfUniverse,
  MalformedBitstring,
  MalformedNumber,
  InvalidRange,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error: a precondition or representation invariant was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace combinadics
