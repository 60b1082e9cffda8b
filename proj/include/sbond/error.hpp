#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbond {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeIndexOutOfRange,
  InvalidFamilyParam,
  InvalidParam,
  ParseError,
  EnumerationCapExceeded,
  SearchBudgetExceeded,
  InfeasibleIncrease,
  PatternAbsent,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line and 0-based byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t byte)
      : Error(ErrorKind::ParseError,
              what + " (line " + std::to_string(line) + ", byte " + std::to_string(byte) + ")"),
        line_(line), byte_(byte) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t byte() const noexcept { return byte_; }

private:
  std::size_t line_;
  std::size_t byte_;
};

}  // namespace sbond
