#pragma once

#include <stdexcept>
#include <string>

namespace klab {

// Base class for all library errors. Every error carries a stable `kind`
// string that the CLI echoes in machine-parsable error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error("DimensionError", msg) {}
};

struct NotHermitianError : Error {
  explicit NotHermitianError(const std::string& msg) : Error("NotHermitianError", msg) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& msg) : Error("NumericalError", msg) {}
};

struct InvalidSpectrumError : Error {
  explicit InvalidSpectrumError(const std::string& msg) : Error("InvalidSpectrumError", msg) {}
};

struct InvalidReferenceError : Error {
  explicit InvalidReferenceError(const std::string& msg) : Error("InvalidReferenceError", msg) {}
};

struct EmptyGeneratorError : Error {
  explicit EmptyGeneratorError(const std::string& msg) : Error("EmptyGeneratorError", msg) {}
};

struct SpecError : Error {
  explicit SpecError(const std::string& msg) : Error("SpecError", msg) {}
};

struct ZeroOperatorError : Error {
  explicit ZeroOperatorError(const std::string& msg) : Error("ZeroOperatorError", msg) {}
};

struct NotScalarError : Error {
  explicit NotScalarError(const std::string& msg) : Error("NotScalarError", msg) {}
};

// Raised when a verification op is called with its theorem hypotheses
// violated; `premise` names the failed hypothesis ("fermion condition",
// "T-invariance", ...).
class HypothesisError : public Error {
 public:
  HypothesisError(std::string premise, const std::string& msg)
      : Error("HypothesisError", msg), premise_(std::move(premise)) {}
  const std::string& premise() const noexcept { return premise_; }

 private:
  std::string premise_;
};

struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error("FormatError", msg) {}
};

}  // namespace klab
