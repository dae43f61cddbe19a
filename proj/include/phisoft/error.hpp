#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phisoft {

enum class ErrorKind {
  out_of_range,
  not_pythagorean,
  non_positive_scalar,
  duplicate_id,
  invalid_id,
  missing_cell,
  invalid_pfn,
  unknown_alternative,
  unknown_parameter,
  universe_mismatch,
  empty_intersection,
  degenerate_weights,
  invalid_weights,
  length_mismatch,
  invalid_config,
  parse_error,
  schema_error,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::not_pythagorean: return "NotPythagorean";
    case ErrorKind::non_positive_scalar: return "NonPositiveScalar";
    case ErrorKind::duplicate_id: return "DuplicateId";
    case ErrorKind::invalid_id: return "InvalidId";
    case ErrorKind::missing_cell: return "MissingCell";
    case ErrorKind::invalid_pfn: return "InvalidPFN";
    case ErrorKind::unknown_alternative: return "UnknownAlternative";
    case ErrorKind::unknown_parameter: return "UnknownParameter";
    case ErrorKind::universe_mismatch: return "UniverseMismatch";
    case ErrorKind::empty_intersection: return "EmptyIntersection";
    case ErrorKind::degenerate_weights: return "DegenerateWeights";
    case ErrorKind::invalid_weights: return "InvalidWeights";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::invalid_config: return "InvalidConfig";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::schema_error: return "SchemaError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and suitable for
/// dispatch; `what()` carries a human-readable message including coordinates
/// where they exist.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace phisoft
