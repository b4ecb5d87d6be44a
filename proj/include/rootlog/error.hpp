#pragma once

#include <stdexcept>
#include <string>

namespace rootlog {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pipeline stage (expand, bounds, term-bound, sign, verify, ...) could not
/// complete. The stage name is carried separately so the CLI can report it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// The asymptotic criteria do not apply to the sequence (oscillating or
/// defective dominant root, positive dominant Delta coefficient, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace rootlog
