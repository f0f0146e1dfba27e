#include "combinadics/errors.hpp"

namespace combinadics {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyRepresentation: return "EmptyRepresentation";
    case ErrorKind::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::EmptyCombination: return "EmptyCombination";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::PredecessorOfZero: return "PredecessorOfZero";
    case ErrorKind::ElementOutOfUniverse: return "ElementOutOfUniverse";
    case ErrorKind::MalformedBitstring: return "MalformedBitstring";
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace combinadics
