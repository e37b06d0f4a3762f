#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnreorder {

enum class ErrorKind {
  BadName,
  DuplicateNode,
  UnknownNode,
  SelfLoop,
  DuplicateArc,
  CycleDetected,
  ArcAbsent,
  AlternatePathExists,
  NodeSetMismatch,
  OverlappingSets,
  EmptySet,
  XInU,
  TooLarge,
  OrderingMismatch,
  OrderingInconsistent,
  EmptyOrdering,
  BadDensity,
  Syntax,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when validation finds a directed cycle; `cycle()` lists the node
/// names along it, starting and ending at the same node.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Text-format diagnostics. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bnreorder
