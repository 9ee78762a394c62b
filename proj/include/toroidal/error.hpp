#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toroidal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the invariants of its type. `field` is a JSON-style
/// path ("presentations[2].u[0]") when the value came from a file.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A blowup center is not contained in the non-principal locus.
class PermissibilityError : public Error {
 public:
  using Error::Error;
};

/// An invariant was requested outside the domain it is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NoCenterError : public Error {
 public:
  using Error::Error;
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrincipalError : public Error {
 public:
  using Error::Error;
};

/// The local data fits none of the toroidal templates.
class NoTemplateMatch : public Error {
 public:
  using Error::Error;
};

}  // namespace toroidal
