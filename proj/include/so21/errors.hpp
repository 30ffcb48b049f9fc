#ifndef SO21_ERRORS_HPP
#define SO21_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace so21 {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A gamma-function argument hit a nonpositive integer where the result
// is genuinely infinite (use reciprocal_gamma when a zero is wanted).
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A series or acceleration failed to reach the requested tolerance.
struct NoConvergenceError : Error {
  explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SingularPointError : DomainError {
  explicit SingularPointError(const std::string& msg) : DomainError(msg) {}
};

struct OutOfOrbitError : DomainError {
  explicit OutOfOrbitError(const std::string& msg) : DomainError(msg) {}
};

struct OutOfChartError : DomainError {
  explicit OutOfChartError(const std::string& msg) : DomainError(msg) {}
};

struct AmbiguousClassError : DomainError {
  explicit AmbiguousClassError(const std::string& msg) : DomainError(msg) {}
};

struct StabilizerMismatchError : DomainError {
  explicit StabilizerMismatchError(const std::string& msg) : DomainError(msg) {}
};

struct LabelOrbitMismatchError : DomainError {
  explicit LabelOrbitMismatchError(const std::string& msg) : DomainError(msg) {}
};

struct UnsupportedCaseError : DomainError {
  explicit UnsupportedCaseError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace so21

#endif
