#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lorenz {

enum class ErrorKind {
  DimensionMismatch,
  NonFiniteValue,
  DuplicateLabel,
  ZeroAtom,
  TooManyAtoms,
  Exact2dOnPlaneOnly,
  DimensionTooLarge,
  SizeGuard,
  InvalidTransform,
  NegativeAtom,
  ZeroTotal,
  DimensionGuard,
  DeltaOutOfRange,
  NotInHull,
  InvalidArgument,
  ParseError,
  IoError,
  NumericalFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by achieve() when the target lies outside the hull; carries a
// direction d with <d, target> > reach(hull, d) + tol.
class NotInHullError : public Error {
 public:
  NotInHullError(std::vector<double> witness, double violation)
      : Error(ErrorKind::NotInHull, "target is outside the hull"),
        witness_(std::move(witness)),
        violation_(violation) {}

  const std::vector<double>& witness() const noexcept { return witness_; }
  double violation() const noexcept { return violation_; }

 private:
  std::vector<double> witness_;
  double violation_;
};

}  // namespace lorenz
