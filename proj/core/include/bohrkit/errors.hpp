#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bohr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (|z| >= 1, b >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested combination of kind and series class has no certified evaluation.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class NoRoot : public Error {
 public:
  using Error::Error;
};

class AmbiguousRoot : public Error {
 public:
  AmbiguousRoot(const std::string& what, std::vector<std::pair<double, double>> brackets)
      : Error(what), brackets_(std::move(brackets)) {}

  const std::vector<std::pair<double, double>>& brackets() const noexcept { return brackets_; }

 private:
  std::vector<std::pair<double, double>> brackets_;
};

// A check that holds mathematically came out false numerically; always reported, never swallowed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace bohr
