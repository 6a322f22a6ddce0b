#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seedkit {

enum class Errc {
  NotDivisible,
  ParseError,
  UnknownDirection,
  NotSignSkewSymmetric,
  InconsistentLabels,
  NotExchangeable,
  LaurentViolation,
  BadSpec,
  NotFrozen,
  LengthMismatch,
  NameClash,
  BadGlueSpec,
  NotGlueable,
  SearchBoundExceeded,
  SourceTargetMismatch,
  NotBiadmissible,
  NotAHomAfterMutation,
  NotAHom,
  HomVerificationFailed,
  NotNoncontractible,
  NotSurjectiveOnVariables,
  IsoVerificationFailed,
  ContractionUndefined,
  ZeroImage,
  NotAcyclic,
  RankTooLarge,
  Overflow,
  BadRequest,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  // Position of the failing step inside a mutation sequence, when relevant.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace seedkit
