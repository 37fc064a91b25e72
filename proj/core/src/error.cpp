#include "hrvtvm/error.hpp"

namespace hrvtvm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::TooShort: return "too-short";
    case ErrorKind::EmptyDirectory: return "empty-directory";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::NoPointInRadius: return "no-point-in-radius";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::TooFewDistinct: return "too-few-distinct";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::LabelCount: return "label-count";
  }
  return "unknown";
}

}  // namespace hrvtvm
