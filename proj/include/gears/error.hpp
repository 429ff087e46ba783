#pragma once

#include <stdexcept>
#include <string>

namespace gears {

/// Failure categories. The CLI maps each one to a fixed exit code.
enum class ErrorKind { io = 1, validation = 2, numerical = 3, verification = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& what) { return {ErrorKind::validation, what}; }
inline Error io_error(const std::string& what) { return {ErrorKind::io, what}; }
inline Error numerical_error(const std::string& what) { return {ErrorKind::numerical, what}; }

}  // namespace gears
