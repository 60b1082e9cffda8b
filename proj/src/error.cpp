#include "sbond/error.hpp"

namespace sbond {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EdgeIndexOutOfRange: return "EdgeIndexOutOfRange";
    case ErrorKind::InvalidFamilyParam: return "InvalidFamilyParam";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::InfeasibleIncrease: return "InfeasibleIncrease";
    case ErrorKind::PatternAbsent: return "PatternAbsent";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace sbond
