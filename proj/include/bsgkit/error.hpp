#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsg {

enum class Errc {
  InvalidModulus,
  ShapeMismatch,
  SpecMismatch,
  EmptySet,
  UnsupportedGroup,
  IndexOutOfRange,
  ArityMismatch,
  EmptyPart,
  NoEdges,
  SameVertex,
  BudgetExceeded,
  NoWitness,
  DensityTooLow,
  InfeasibleEpsilon,
  EpsilonTooLarge,
  UnequalParts,
  HypothesisViolated,
  ConfigInvalid,
  ModeMismatch,
  TooLarge,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bsg
