#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gabm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (scenario, script, episode log, reference file).
class ParseError : public Error {
 public:
  ParseError(std::string message, int line = -1, int column = -1)
      : Error(with_position(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string with_position(const std::string& message, int line, int column) {
    if (line < 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column >= 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_;
  int column_;
};

struct Violation {
  std::string field;    // path into the document, e.g. "agents[2].traits.openness"
  std::string message;  // constraint that was violated
};

// Carries the complete violation list, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(summarize(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& violations) {
    std::string out = "scenario validation failed (" +
                      std::to_string(violations.size()) + " violation" +
                      (violations.size() == 1 ? "" : "s") + ")";
    for (const auto& v : violations) out += "\n  " + v.field + ": " + v.message;
    return out;
  }

  std::vector<Violation> violations_;
};

// A caller violated a documented precondition (empty statement list, etc.).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A user-supplied path could not be read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

class BackendError : public Error {
 public:
  using Error::Error;
};

// Non-retryable: the endpoint rejected our credentials.
class AuthError : public BackendError {
 public:
  using BackendError::BackendError;
};

class RetryExhaustedError : public BackendError {
 public:
  RetryExhaustedError(int attempts, const std::string& last_error)
      : BackendError("retries exhausted after " + std::to_string(attempts) +
                     " attempts; last error: " + last_error),
        attempts_(attempts),
        last_error_(last_error) {}

  int attempts() const { return attempts_; }
  const std::string& last_error() const { return last_error_; }

 private:
  int attempts_;
  std::string last_error_;
};

class ScriptExhaustedError : public BackendError {
 public:
  using BackendError::BackendError;
};

class MalformedResponseError : public BackendError {
 public:
  using BackendError::BackendError;
};

}  // namespace gabm
