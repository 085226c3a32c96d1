#include "mpemba/error.hpp"

namespace mpemba {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TraceViolation: return "TraceViolation";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::NotXForm: return "NotXForm";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoCrossing: return "NoCrossing";
  }
  return "Unknown";
}

}  // namespace mpemba
