#pragma once

#include <stdexcept>
#include <string>

namespace simplexlift {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, point off its quadric, rank-deficient span.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside what the library supports
/// (e.g. curved volumes for k > 3, Gram norms in flat space).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The input violates a standing geometric assumption of the theory
/// (non-degenerate facets, degenerate configuration, generic position).
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateFaceError : public AssumptionViolation {
 public:
  explicit DegenerateFaceError(const std::string& what, int face_index = -1)
      : AssumptionViolation(what), face_index_(face_index) {}

  /// Index of the offending facet, or -1 when not attributable to one facet.
  int face_index() const noexcept { return face_index_; }

 private:
  int face_index_;
};

class NotDegenerateError : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

/// e.g. antipodal probe points on the sphere.
class SingularConfigurationError : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

/// Dual construction hit a singular linear system.
class ConstructionError : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

/// A relation that the theory guarantees was violated beyond tolerance.
class DualityViolation : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplexlift
