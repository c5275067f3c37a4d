#ifndef POLYMUX_ERRORS_HPP
#define POLYMUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polymux {

/**
 * Thrown when input parameters violate a documented precondition
 * (dimension out of range, vertex counts inconsistent, and so on).
 */
class BadParams : public std::invalid_argument {
 public:
  explicit BadParams(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Facet list with no facets, or a facet that is empty or not proper.
class EmptyInput : public BadParams {
 public:
  explicit EmptyInput(const std::string& msg) : BadParams(msg) {}
};

/// A vertex label was referenced that the object does not contain.
class UnknownVertex : public BadParams {
 public:
  explicit UnknownVertex(const std::string& msg) : BadParams(msg) {}
};

/// The poset built from the input is not graded with the expected rank span.
class NotGraded : public std::runtime_error {
 public:
  explicit NotGraded(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation requiring an Eulerian lattice was given a non-Eulerian one.
class NotEulerian : public std::runtime_error {
 public:
  explicit NotEulerian(const std::string& msg) : std::runtime_error(msg) {}
};

/// A closed-form coefficient formula was evaluated where its denominator vanishes.
class DegenerateDenominator : public std::runtime_error {
 public:
  explicit DegenerateDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

/// A quantity that must be a nonnegative integer came out fractional or negative.
class NonIntegral : public std::runtime_error {
 public:
  explicit NonIntegral(const std::string& msg) : std::runtime_error(msg) {}
};

/// An h-vector that must be palindromic is not.
class AsymmetricResult : public std::runtime_error {
 public:
  explicit AsymmetricResult(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polymux

#endif
