#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qv {

enum class Errc {
  NonPrime,
  NonMonic,
  OmegaNotUnit,
  NotAUnit,
  AugmentationSingular,
  TooLarge,
  ArityMismatch,
  NotAField,
  OmegaTrivial,
  DivisionByZero,
  NotDivisibleByP,
  BadToken,
  IndexOutOfRange,
  TooFewStrands,
  SingularPresent,
  InconsistentColoring,
  PolicyInvalid,
  NotACocycle,
  RelationNotAnnihilated,
  ParseError,
  UnknownCocycle,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Domain error carrying a machine-readable code. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qv
