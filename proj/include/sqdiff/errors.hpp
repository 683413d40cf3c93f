#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqdiff {

enum class ErrorKind {
  Domain,         // argument outside the mathematical domain (e.g. isqrt of a negative)
  Validation,     // input violates a named constraint
  NonPrimitive,   // triple valid up to a common factor
  Degeneracy,     // zero/equal entries, vanishing denominators, singular fibers
  Parameter,      // excluded parameter value
  Trivial,        // trivial non-Euclidean triple (an entry is 0 or +-1)
  Irrationality,  // a square root that must be rational is not
  NonRational,    // a requested point exists but is not defined over Q
  Precondition,
  Parse,
  Config,
  Io,
  Internal,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library.
///
/// `constraint()` names the first failing condition (for example "x^2-y^2")
/// so that callers can report it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string constraint, const std::string& message)
      : std::runtime_error(message), kind_(kind), constraint_(std::move(constraint)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_kind_name(kind_); }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  ErrorKind kind_;
  std::string constraint_;
};

inline std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain_error";
    case ErrorKind::Validation: return "validation_error";
    case ErrorKind::NonPrimitive: return "non_primitive_error";
    case ErrorKind::Degeneracy: return "degeneracy_error";
    case ErrorKind::Parameter: return "parameter_error";
    case ErrorKind::Trivial: return "trivial_solution_error";
    case ErrorKind::Irrationality: return "irrationality_error";
    case ErrorKind::NonRational: return "non_rational_result";
    case ErrorKind::Precondition: return "precondition_error";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Config: return "config_error";
    case ErrorKind::Io: return "io_error";
    case ErrorKind::Internal: return "internal_error";
  }
  return "error";
}

}  // namespace sqdiff
