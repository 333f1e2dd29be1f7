#pragma once

#include <stdexcept>
#include <string>

namespace catalysis {

enum class ErrorKind {
  Parse,
  NegativeEntry,
  ZeroVector,
  InvalidVector,
  LengthMismatch,
  IndexOutOfRange,
  WrongDimension,
  NotIncomparable,
  TieAtSamplePoint,
  TieAtRepresentative,
  DegenerateSimplex,
  UnsupportedK,
  Internal,
};

const char* to_string(ErrorKind kind);

class CatalysisError : public std::runtime_error {
 public:
  CatalysisError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace catalysis
