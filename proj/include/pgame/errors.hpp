#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgame {

// Error kinds used across the library. Arena validation collects several of
// these into one ValidationError; everything else throws a single GameError.
enum class Errc {
  // arena validation
  MissingRedEdge,
  MissingGreenEdge,
  ExtraCounterEdge,
  DeadEnd,
  BadLeaf,
  UnknownVertex,
  DuplicateVertex,
  SelfLoop,
  BadEdgeColor,
  CounterClassGap,
  // operations
  IllegalChoice,
  NotALeaf,
  IncompleteStrategy,
  ArityTooLarge,
  ArityMismatch,
  NotReachability,
  HasCounters,
  NotMonotone,
  EmptyCounterClass,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingRedEdge: return "MissingRedEdge";
    case Errc::MissingGreenEdge: return "MissingGreenEdge";
    case Errc::ExtraCounterEdge: return "ExtraCounterEdge";
    case Errc::DeadEnd: return "DeadEnd";
    case Errc::BadLeaf: return "BadLeaf";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::BadEdgeColor: return "BadEdgeColor";
    case Errc::CounterClassGap: return "CounterClassGap";
    case Errc::IllegalChoice: return "IllegalChoice";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::IncompleteStrategy: return "IncompleteStrategy";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotReachability: return "NotReachability";
    case Errc::HasCounters: return "HasCounters";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::EmptyCounterClass: return "EmptyCounterClass";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class GameError : public std::runtime_error {
 public:
  GameError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// One violation found while validating a raw arena.
struct Diagnostic {
  Errc code;
  std::string subject;  // vertex id or "from->to" for edges
  std::string detail;

  std::string str() const {
    std::ostringstream os;
    os << errc_name(code) << " (" << subject << "): " << detail;
    return os.str();
  }
};

class ValidationError : public GameError {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags)
      : GameError(diags.empty() ? Errc::UnknownVertex : diags.front().code, join(diags)),
        diags_(std::move(diags)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  static std::string join(const std::vector<Diagnostic>& ds) {
    std::ostringstream os;
    for (size_t i = 0; i < ds.size(); ++i) {
      if (i) os << "; ";
      os << ds[i].str();
    }
    return os.str();
  }

  std::vector<Diagnostic> diags_;
};

class ParseError : public GameError {
 public:
  ParseError(int line, const std::string& what)
      : GameError(Errc::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace pgame
