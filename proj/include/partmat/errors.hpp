#pragma once

#include <stdexcept>
#include <string>

namespace partmat {

// First violated invariant of a combinatorial object, with where it failed.
struct Violation {
  std::string invariant;
  std::string detail;

  std::string to_string() const { return invariant + ": " + detail; }
};

// Thrown when constructing an object from data that breaks its invariants.
class InvalidObject : public std::invalid_argument {
 public:
  explicit InvalidObject(Violation v)
      : std::invalid_argument(v.to_string()), violation_(std::move(v)) {}

  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

// A valid object handed to a map outside that map's domain
// (e.g. phi on a matrix that is not improper).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace partmat
