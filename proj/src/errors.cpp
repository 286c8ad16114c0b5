#include "gem/errors.hpp"

namespace gem {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateVertexInColor: return "DuplicateVertexInColor";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::PermutationColorMismatch: return "PermutationColorMismatch";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::NotADipole: return "NotADipole";
    case ErrorKind::PhiNotIsomorphism: return "PhiNotIsomorphism";
    case ErrorKind::MissingIColoredMatching: return "MissingIColoredMatching";
    case ErrorKind::SameComponentInIHat: return "SameComponentInIHat";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BadMoveSpec: return "BadMoveSpec";
    case ErrorKind::ResultInvalid: return "ResultInvalid";
    case ErrorKind::BaseNotCrystallization: return "BaseNotCrystallization";
    case ErrorKind::AuditFailed: return "AuditFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidCharacteristicFunction: return "InvalidCharacteristicFunction";
    case ErrorKind::ColorCountMismatch: return "ColorCountMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingData: return "MissingData";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, int line, int column) {
  std::string out = to_string(kind);
  if (line > 0) {
    out += " at line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
  }
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(decorate(kind, message, line, column)),
      kind_(kind),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace gem
