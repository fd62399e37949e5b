#include "kinkwave/errors.hpp"

namespace kinkwave {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::DomainOverflow: return "domain-overflow";
    case ErrorKind::InvalidScale: return "invalid-scale";
    case ErrorKind::DegenerateSpeed: return "degenerate-speed";
    case ErrorKind::NoWave: return "no-wave";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Stiffness: return "stiffness";
    case ErrorKind::InconsistentField: return "inconsistent-field";
    case ErrorKind::BlockedConnection: return "blocked-connection";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace kinkwave
