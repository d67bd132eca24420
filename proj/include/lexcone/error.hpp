#pragma once

#include <stdexcept>
#include <string>

namespace lexcone {

// Base class for every error raised by the library. The CLI maps these onto
// exit code 2; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LEXCONE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(what) {}          \
    const char* kind() const noexcept override { return #Name; }     \
  };

LEXCONE_DEFINE_ERROR(ParseError)
LEXCONE_DEFINE_ERROR(InvalidLabel)
LEXCONE_DEFINE_ERROR(CycleError)
LEXCONE_DEFINE_ERROR(UnknownLabel)
LEXCONE_DEFINE_ERROR(PosetMismatch)
LEXCONE_DEFINE_ERROR(NotApplicable)
LEXCONE_DEFINE_ERROR(NotAForest)
LEXCONE_DEFINE_ERROR(IsAForest)
LEXCONE_DEFINE_ERROR(NotAnUpperBound)
LEXCONE_DEFINE_ERROR(NotPositive)
LEXCONE_DEFINE_ERROR(NotAProductPoset)
LEXCONE_DEFINE_ERROR(NotInCone)
LEXCONE_DEFINE_ERROR(DimensionMismatch)
LEXCONE_DEFINE_ERROR(NoHalfSpace)
LEXCONE_DEFINE_ERROR(NotPointed)
LEXCONE_DEFINE_ERROR(InvalidGenerator)
// Raised when a self-certifying routine fails its own runtime check.
LEXCONE_DEFINE_ERROR(VerificationFailure)

#undef LEXCONE_DEFINE_ERROR

}  // namespace lexcone
