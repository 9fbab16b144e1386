#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infdef {

/// Domain error categories. The CLI reports these by name.
enum class ErrorKind {
  syntax,
  unknown_variable,
  zero_denominator,
  not_representable,
  ring_mismatch,
  not_zero_dimensional,
  not_artinian,
  residue_field,
  invalid_algebra,
  invalid_morphism,
  not_surjective,
  target_mismatch,
  not_small,
  not_in_maximal_ideal,
  parameter_count,
  incompatible,
  non_isolated,
  constant_polynomial,
  no_stabilization,
  out_of_range,
  truncation_overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::syntax,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace infdef
