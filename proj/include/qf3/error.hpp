#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qf3 {

enum class ErrorKind {
  NotPositiveDefinite,
  Overflow,
  NotUnimodular,
  BadPrime,
  PreconditionViolated,
  NotRepresented,
  PreconditionFailed,
  NonIntegralImage,
  NoAdjustmentWorks,
  InvalidInput,
  NotRepresentable,
  LemmaViolated,
  NoEscape,
  PipelineStuck,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this one type; `kind()`
/// distinguishes the cases callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qf3
