#pragma once

#include <stdexcept>
#include <string>

namespace thetab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument for an operation (out-of-range index, length mismatch, bad parse).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

// Float-mode LP pivot collapse; callers should retry in exact mode.
struct NumericalBreakdown : Error {
  explicit NumericalBreakdown(const std::string& msg) : Error(msg) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& msg = "polynomial is not homogeneous") : Error(msg) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

// The bivariate zonal kernel did not reduce to a polynomial in the inner
// product; signals an implementation bug, never a valid outcome.
struct ReductionFailure : Error {
  explicit ReductionFailure(const std::string& msg) : Error(msg) {}
};

struct InfeasibleAtDegree : Error {
  explicit InfeasibleAtDegree(const std::string& msg) : Error(msg) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string& msg) : Error(msg) {}
};

struct NoncommutativeCommutant : Error {
  explicit NoncommutativeCommutant(const std::string& msg) : Error(msg) {}
};

// Edge set of the graph is not constant on pair orbits of the group.
struct NotInvariant : Error {
  explicit NotInvariant(const std::string& msg) : Error(msg) {}
};

struct NotTransitive : Error {
  explicit NotTransitive(const std::string& msg) : Error(msg) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

}  // namespace thetab
