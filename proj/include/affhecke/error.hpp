#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain (bad rank,
/// non-dominant coweight, unparsable encoding, ...). The CLI maps these to
/// exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. The CLI maps these to exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

#define AFFHECKE_INPUT_ERROR(Name)          \
  class Name : public InvalidInput {        \
   public:                                  \
    explicit Name(const std::string& what) \
        : InvalidInput(#Name ": " + what) {} \
  }

AFFHECKE_INPUT_ERROR(UnsupportedFamilyRank);
AFFHECKE_INPUT_ERROR(DimensionMismatch);
AFFHECKE_INPUT_ERROR(DatumMismatch);
AFFHECKE_INPUT_ERROR(NotDominant);
AFFHECKE_INPUT_ERROR(NotMinuscule);
AFFHECKE_INPUT_ERROR(NotInAdm);
AFFHECKE_INPUT_ERROR(NotMinimal);
AFFHECKE_INPUT_ERROR(NotExpandable);
AFFHECKE_INPUT_ERROR(ZeroEvaluationPoint);
AFFHECKE_INPUT_ERROR(NotInAffineWeylGroup);
AFFHECKE_INPUT_ERROR(ParseError);

#undef AFFHECKE_INPUT_ERROR

}  // namespace affhecke
