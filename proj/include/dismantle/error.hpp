#ifndef DISMANTLE_ERROR_HPP
#define DISMANTLE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dismantle {

enum class ErrorCode {
  input,            // malformed arguments: unknown ids, mismatched sources, ...
  domination,       // a fold / deletion whose domination precondition fails
  precondition,     // operation-specific precondition (e.g. f not comparable to 1)
  validation,       // axiom violation while building an object
  parse,            // text format errors, carry a line number
  resource,         // configured budget exceeded
  certificate,      // certificate does not replay
  stale_certificate,// certificate digest does not match the object
  internal          // consistency check that should never fail
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::input: return "input";
    case ErrorCode::domination: return "domination";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::validation: return "validation";
    case ErrorCode::parse: return "parse";
    case ErrorCode::resource: return "resource";
    case ErrorCode::certificate: return "certificate";
    case ErrorCode::stale_certificate: return "stale_certificate";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when a search exceeds its configured budget; `bound` is the limit.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t bound)
      : Error(ErrorCode::resource,
              what + " (budget " + std::to_string(bound) + " exceeded)"),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dismantle

#endif  // DISMANTLE_ERROR_HPP
