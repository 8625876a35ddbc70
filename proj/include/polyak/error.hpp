#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyak {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept { return "internal"; }
};

// Malformed diagram (bad endpoint set, head == tail, bad sign).
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "validation"; }
};

// Diagram or sum of the wrong kind for the requested space.
class FlavorError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "flavor"; }
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "resource"; }
};

// Operation not applicable at the requested site.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "precondition"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const char* code() const noexcept override { return "parse"; }

 private:
  std::size_t position_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string pointer)
      : Error(what + " at " + (pointer.empty() ? std::string("/") : pointer)), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }
  const char* code() const noexcept override { return "schema"; }

 private:
  std::string pointer_;
};

// A six-term row that does not split as four-term plus two-term.
class ConventionMismatchError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "convention"; }
};

}  // namespace polyak
