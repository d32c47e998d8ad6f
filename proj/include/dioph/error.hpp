#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

enum class ErrorCode {
  domain_mismatch,
  undefined_gcd,
  zero_polynomial,
  invalid_argument,
  resource_limit,
  dimensionality,
  degenerate_family,
  unsupported,
  inapplicable,
  syntax,
  unknown_variable,
};

/// Stable machine-readable name, used by the CLI error objects.
constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain_mismatch: return "domain-mismatch";
    case ErrorCode::undefined_gcd: return "undefined-gcd";
    case ErrorCode::zero_polynomial: return "zero-polynomial";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::resource_limit: return "resource-limit";
    case ErrorCode::dimensionality: return "dimensionality";
    case ErrorCode::degenerate_family: return "degenerate-family";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::inapplicable: return "inapplicable";
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::unknown_variable: return "unknown-variable";
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

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::syntax,
              "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dioph
