#pragma once

#include <stdexcept>
#include <string>

namespace gem {

enum class ErrorKind {
  DuplicateVertexInColor,
  LoopEdge,
  VertexCountMismatch,
  OddVertexCount,
  ColorOutOfRange,
  VertexOutOfRange,
  PermutationColorMismatch,
  DimensionUnsupported,
  NotADipole,
  PhiNotIsomorphism,
  MissingIColoredMatching,
  SameComponentInIHat,
  PreconditionFailed,
  BadMoveSpec,
  ResultInvalid,
  BaseNotCrystallization,
  AuditFailed,
  BudgetExceeded,
  InvalidCharacteristicFunction,
  ColorCountMismatch,
  UnknownLabel,
  DuplicateLabel,
  ParseError,
  MissingData,
};

const char* to_string(ErrorKind kind) noexcept;

// line/column are 1-based; 0 means "not tied to input text".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  int line_;
  int column_;
};

}  // namespace gem
