#include "bnreorder/error.hpp"

namespace bnreorder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadName: return "BadName";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::ArcAbsent: return "ArcAbsent";
    case ErrorKind::AlternatePathExists: return "AlternatePathExists";
    case ErrorKind::NodeSetMismatch: return "NodeSetMismatch";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::XInU: return "XInU";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OrderingMismatch: return "OrderingMismatch";
    case ErrorKind::OrderingInconsistent: return "OrderingInconsistent";
    case ErrorKind::EmptyOrdering: return "EmptyOrdering";
    case ErrorKind::BadDensity: return "BadDensity";
    case ErrorKind::Syntax: return "SyntaxError";
  }
  return "Unknown";
}

namespace {

std::string describe_cycle(const std::vector<std::string>& cycle) {
  std::string out = "cycle detected:";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out += i == 0 ? " " : " -> ";
    out += cycle[i];
  }
  return out;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error(ErrorKind::CycleDetected, describe_cycle(cycle)), cycle_(std::move(cycle)) {}

}  // namespace bnreorder
