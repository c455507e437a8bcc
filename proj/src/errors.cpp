#include "qposet/errors.hpp"

namespace qposet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotAntitone: return "NotAntitone";
    case ErrorKind::MissingJoin: return "MissingJoin";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qposet
