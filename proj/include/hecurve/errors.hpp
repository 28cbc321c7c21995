#pragma once

#include <stdexcept>
#include <string>

namespace hecurve {

enum class Err {
  DivisionByZero,
  ConductorMismatch,
  ConductorTooSmall,
  NotSquare,
  IndexOutOfRange,
  ResolutionTooLong,
  NonIntegralMultiplicity,
  SingularEulerMatrix,
  NotFiniteDimensional,
  DuplicatePoints,
  UnknownType,
  ActionRelationViolation,
  NotIso,
  CheckFailed,
  NotTransitive,
  PatternMismatch,
  PointNotOnCurve,
  RelationFails,
  CurveNotPreserved,
  Inconsistent,
  UnknownKind,
  EndNotDivision,
  WrongEndDimension,
  UnsupportedResidue,
  NotDivision,
  UnknownGroup,
  InvalidInput,
};

const char* err_name(Err e);

/// Library-wide exception: a typed code plus context.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Err c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace hecurve
