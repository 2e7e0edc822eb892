#pragma once

#include <stdexcept>
#include <string>

namespace assoc {

/// Base class for failures of the exact polytope kernels.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public GeometryError {
 public:
  explicit InfeasibleError(const std::string& what = "constraint system is infeasible")
      : GeometryError(what) {}
};

class UnboundedError : public GeometryError {
 public:
  explicit UnboundedError(const std::string& what = "constraint system is unbounded")
      : GeometryError(what) {}
};

/// Raised when a linear functional attains its optimum on more than one vertex,
/// i.e. the orientation vector is perpendicular to an edge.
class NonUniqueOptimumError : public GeometryError {
 public:
  explicit NonUniqueOptimumError(const std::string& what = "optimum is attained on more than one vertex")
      : GeometryError(what) {}
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point given as input does not lie in the polytope it refers to.
class OutsidePolytopeError : public std::invalid_argument {
 public:
  explicit OutsidePolytopeError(const std::string& what = "point does not lie in the polytope")
      : std::invalid_argument(what) {}
};

/// Internal consistency check failed (a bug, not bad input).
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace assoc
