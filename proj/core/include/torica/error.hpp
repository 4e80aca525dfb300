#pragma once

#include <stdexcept>
#include <string>

namespace torica {

// Every failure raised by the library carries one of these codes so the
// CLI can map it onto an exit status and a machine-readable error object.
enum class ErrorCode {
  InvalidInput,          // malformed files, bad indices, wrong lengths
  NonPrimitiveRay,
  InvalidFan,
  RankDeficient,
  ClassGroupMismatch,
  InvalidWeights,
  EmptyDegree,
  InconsistentRelation,
  NotAmple,
  NotQuasiSmooth,
  NotNondegenerate,
  DegreeMismatch,
  DivisionByVariable,
  BudgetExceeded,
  TheoremViolation,      // a computed dimension contradicts a theorem
  InternalInvariant,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace torica
