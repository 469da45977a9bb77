#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace impc {

// Position inside one source file. line/col are 1-based; a zero line means
// "no location" (synthesized nodes).
struct Span {
  int file = 0;
  int line = 0;
  int col = 0;
};

// Maps span.file to a file name. A single compilation keeps one of these.
class SourceMap {
 public:
  int add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
  }
  const std::string& name(int id) const { return names_.at(id); }
  int count() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

// Compile-time failure: lexing, parsing, typing, specialization, emission.
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Failure while interpreting a program (uninitialized read, deadlock, ...).
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

inline std::string format_at(const SourceMap& sm, Span sp, const std::string& msg) {
  std::ostringstream os;
  if (sp.line > 0 && sp.file >= 0 && sp.file < sm.count())
    os << sm.name(sp.file) << ":" << sp.line << ":" << sp.col << ": ";
  os << msg;
  return os.str();
}

[[noreturn]] inline void fail_at(const SourceMap& sm, Span sp, const std::string& msg) {
  throw CompileError(format_at(sm, sp, msg));
}

}  // namespace impc
