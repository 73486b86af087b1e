#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (shape mismatch, wrong quiver, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Base for every "the finite search was too large to decide" outcome.
/// These are never converted into a yes/no answer.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class IsoTestInconclusive : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

class DecomposeInconclusive : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

class ThresholdExceeded : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

class ClosureInconclusive : public Inconclusive {
 public:
  ClosureInconclusive(const std::string& what, std::vector<std::size_t> partial)
      : Inconclusive(what), partial_(std::move(partial)) {}
  const std::vector<std::size_t>& partial() const noexcept { return partial_; }

 private:
  std::vector<std::size_t> partial_;
};

/// An object produced by a computation has no isomorphic match in the universe.
class UniverseIncomplete : public Error {
 public:
  using Error::Error;
};

/// A size cap (dimension bound, enumeration cap) was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the given input. The message names
/// the violated condition and a witness object.
class HypothesisFailed : public Error {
 public:
  HypothesisFailed(const std::string& condition, const std::string& witness)
      : Error(condition + " (witness: " + witness + ")"),
        condition_(condition),
        witness_(witness) {}
  const std::string& condition() const noexcept { return condition_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string condition_;
  std::string witness_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrec
