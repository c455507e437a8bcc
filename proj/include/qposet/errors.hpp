#pragma once

#include <stdexcept>
#include <string>

namespace qposet {

enum class ErrorKind {
  InvalidArgument,
  CycleDetected,
  NotBounded,
  NotInvolutive,
  NotAntitone,
  MissingJoin,
  PreconditionViolated,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Base for every error raised by the library. `kind()` identifies the failure class.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// A join (or a meet obtained through the involution) required by an arrow does not exist.
/// Carries the pair whose join was missing.
class MissingJoin : public Error {
public:
  /// `context` should name the two elements; it becomes the message.
  MissingJoin(std::size_t lhs, std::size_t rhs, const std::string& context)
      : Error(ErrorKind::MissingJoin, context),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// Malformed document. `field()` names the offending field, `line()` is 1-based or 0 if unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& field, std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError, describe(field, line, message)), field_(field), line_(line) {}

  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

private:
  static std::string describe(const std::string& field, std::size_t line, const std::string& message) {
    std::string where = field.empty() ? std::string("document") : "field '" + field + "'";
    if (line != 0) where += " (line " + std::to_string(line) + ")";
    return where + ": " + message;
  }

  std::string field_;
  std::size_t line_;
};

}  // namespace qposet
