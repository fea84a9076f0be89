#pragma once

#include <stdexcept>
#include <string>

namespace moltm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MOLTM_DEFINE_ERROR(Name)         \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

MOLTM_DEFINE_ERROR(InvalidSequence);
MOLTM_DEFINE_ERROR(InvalidMolecule);
MOLTM_DEFINE_ERROR(IncompatibleEnds);
MOLTM_DEFINE_ERROR(StaleHit);
MOLTM_DEFINE_ERROR(AmbiguityError);
MOLTM_DEFINE_ERROR(ParseError);
MOLTM_DEFINE_ERROR(InvalidAssignment);
MOLTM_DEFINE_ERROR(LengthMismatch);
MOLTM_DEFINE_ERROR(UnrecognizedFrame);
MOLTM_DEFINE_ERROR(UndecodableSegment);
MOLTM_DEFINE_ERROR(MissingHalt);
MOLTM_DEFINE_ERROR(BudgetExhausted);
MOLTM_DEFINE_ERROR(SearchExhausted);
MOLTM_DEFINE_ERROR(InvariantViolation);

/// Failures of the transition-selection step; both indicate a bad assignment.
class MachineError : public Error {
 public:
  using Error::Error;
};
class NoMatchingTransition : public MachineError {
 public:
  using MachineError::MachineError;
};
class AmbiguousTransition : public MachineError {
 public:
  using MachineError::MachineError;
};

#undef MOLTM_DEFINE_ERROR

}  // namespace moltm
