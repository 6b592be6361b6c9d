#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simplikit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the parser. Carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Input is not valid Java.
class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Input is Java, but uses a construct outside the supported subset.
class UnsupportedConstruct : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A rewrite no longer matches the unit it is applied to.
class StaleRewrite : public Error {
 public:
  using Error::Error;
};

/// Unbalanced or misplaced localization marker tokens.
class MalformedMarkers : public Error {
 public:
  using Error::Error;
};

/// Candidate generation failed. `kind` is one of backend-unreachable,
/// backend-protocol-error, timeout, unknown-backend.
class BackendError : public Error {
 public:
  BackendError(std::string kind, const std::string& what)
      : Error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Validation infrastructure failure (span-mismatch, io-failure, bad config).
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& what)
      : Error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Configuration file or flag problems.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplikit
