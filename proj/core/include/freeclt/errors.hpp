#pragma once

#include <stdexcept>
#include <string>

namespace freeclt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside the domain where an operation is defined (e.g. a Cauchy
/// transform evaluated off the upper half-plane, a density at a singularity).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or matrix request that exceeds the configured cap.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, int requested, int cap)
      : Error(what), requested_(requested), cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// Newton iteration failed to converge. Carries the last residual seen.
class InversionFailure : public Error {
 public:
  InversionFailure(const std::string& what, double residual)
      : Error(what + " (last residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace freeclt
