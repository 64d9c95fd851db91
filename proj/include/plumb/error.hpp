#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plumb {

enum class ErrorCode {
  invalid_argument,
  parse,
  not_negative_definite,
  no_internal_vertices,
  unsupported,
  insufficient_truncation,
  not_slim,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorCode::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace plumb
