#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcb {

enum class ErrorKind {
  InvalidArgument,
  InexactDivision,
  NegativePower,
  NonIntegralPairing,
  MalformedWord,
  StepLimitExceeded,
  NotInOmegaPlus,
  NotAdmissible,
  NotOrthogonalTableau,
  IterationLimit,
  ShapeMismatch,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

// Errors that signal a defect in the algorithm rather than bad input. The CLI
// maps these to exit code 2.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const char* what) {
  if (!condition) fail(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace qcb
